#pragma once

#include <string>
#include <vector>

#include "specbox/matelem.hpp"

namespace specbox {

/// Thrown when an iteration fails to reach its tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, Real achieved)
      : std::runtime_error(what), achieved_residual(std::move(achieved)) {}
  Real achieved_residual;
};

struct SpectrumResult {
  std::vector<Real> eigenvalues;  // ascending
  /// Unit-norm coefficient vectors, one per eigenvalue; empty unless requested.
  std::vector<std::vector<Real>> eigenvectors;
  /// Max-norm of D v - E v per pair; empty unless vectors were requested.
  std::vector<Real> residuals;
  int sweeps_used = 0;
};

/// Cyclic Jacobi diagonalization of a dense symmetric matrix. Sweeps run
/// until the off-diagonal Frobenius norm drops below eig_tol * ||D||_F;
/// throws NonConvergenceError after 100 sweeps.
SpectrumResult eig_sym(const SymMatrix& d, const PrecisionCtx& ctx,
                       bool want_vectors = false);

/// Number of leading significant decimal digits the two values share,
/// compared digit by digit; 0 when signs or decimal exponents disagree,
/// max_digits when no mismatch is found within max_digits digits.
int estimate_significant_digits(const Real& a, const Real& b, int max_digits);

}  // namespace specbox
