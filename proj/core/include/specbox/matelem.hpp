#pragma once

#include <iosfwd>
#include <vector>

#include "specbox/basis.hpp"
#include "specbox/potential.hpp"

namespace specbox {

/// Dense symmetric matrix; the upper triangle is the authoritative storage,
/// so assembled matrices are symmetric by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int order)
      : order_(order), upper_(static_cast<size_t>(order) * (order + 1) / 2) {}

  int order() const { return order_; }

  Real& at(int i, int j) { return upper_[offset(i, j)]; }
  const Real& at(int i, int j) const { return upper_[offset(i, j)]; }

  Real trace() const;
  Real frobenius_norm() const;

 private:
  size_t offset(int i, int j) const {
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return static_cast<size_t>(i) * (2 * order_ - i - 1) / 2 + j;
  }
  int order_;
  std::vector<Real> upper_;
};

/// T(j, n, L) = integral_{-L}^{L} x^j cos(n pi x / L) dx, in closed form:
///   n = 0:          2 L^(j+1) / (j+1)
///   n >= 1, j = 0:  0
///   n >= 1, j >= 2: with a = n pi / L,
///                   T(j) = 2 j (-1)^n L^(j-1) / a^2 - j (j-1) / a^2 T(j-2)
/// Throws std::invalid_argument for odd j.
Real cosine_moment(int j, int n, const Real& L, const PrecisionCtx& ctx);

/// Potential matrix C_{m,m'} = <phi_m | V | phi_m'>; each entry reduces via
/// product-to-sum to two cosine moments per potential term.
SymMatrix potential_matrix(const Potential& p, const BasisSpec& spec,
                           const PrecisionCtx& ctx);

/// Hamiltonian D = diag(kinetic eigenvalues) + potential matrix.
SymMatrix hamiltonian_matrix(const Potential& p, const BasisSpec& spec,
                             const PrecisionCtx& ctx);

/// Plain-text dump: first line the order N, then the upper-triangle entries
/// row-major, one decimal value per line at full precision.
void dump_matrix(const SymMatrix& m, std::ostream& out, int digits);

}  // namespace specbox
