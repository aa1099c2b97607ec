#pragma once

#include "specbox/precision.hpp"

namespace specbox {

enum class BoundaryFamily { Periodic, Dirichlet };
enum class Parity { Even, Odd };

/// One trigonometric basis family on [-L, L]:
///   Periodic-Even    g_m cos(m pi x / L) / sqrt(L),    m = 0 .. N-1,
///                    g_0 = 2^(-1/2), g_m = 1 otherwise
///   Periodic-Odd     sin(m pi x / L) / sqrt(L),        m = 1 .. N
///   Dirichlet-Even   cos((m+1/2) pi x / L) / sqrt(L),  m = 0 .. N-1
///   Dirichlet-Odd    sin(m pi x / L) / sqrt(L),        m = 1 .. N
/// All four sets are exactly orthonormal on [-L, L].
struct BasisSpec {
  BoundaryFamily family;
  Parity parity;
  int n_basis;
  Real half_width;

  /// First value of the family's natural index m.
  int first_index() const { return parity == Parity::Odd ? 1 : 0; }
  /// Natural index of the i-th basis function, i = 0 .. n_basis-1.
  int index_of(int i) const { return i + first_index(); }
  bool index_in_range(int m) const {
    return m >= first_index() && m < first_index() + n_basis;
  }

  /// Wave number of function m, in units of pi/L (integer or half-integer).
  Real frequency_multiplier(int m) const {
    if (family == BoundaryFamily::Dirichlet && parity == Parity::Even) {
      return Real(2 * m + 1) / 2;
    }
    return Real(m);
  }

  /// Normalization weight; 2^(-1/2) for the Periodic-Even constant, else 1.
  Real weight(int m) const {
    if (family == BoundaryFamily::Periodic && parity == Parity::Even &&
        m == 0) {
      return 1 / sqrt(Real(2));
    }
    return Real(1);
  }
};

/// phi_m(x). Throws std::out_of_range for m outside the family's index range.
Real basis_value(const BasisSpec& spec, int m, const Real& x,
                 const PrecisionCtx& ctx);

/// Exact eigenvalue of -d^2/dx^2 on phi_m.
Real kinetic_eigenvalue(const BasisSpec& spec, int m, const PrecisionCtx& ctx);

}  // namespace specbox
