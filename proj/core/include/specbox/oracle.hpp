#pragma once

#include <vector>

#include "specbox/potential.hpp"

namespace specbox {

/// Test-only verifiers, independent of the closed-form production paths.

struct QuadratureConfig {
  Real abs_tol;
  Real rel_tol;
  int max_depth = 40;
};

struct QuadratureResult {
  Real value;
  Real error_estimate;
  bool converged;
};

/// Adaptive Simpson estimate of integral_{-L}^{L} x^j cos(n pi x / L) dx.
/// Reports the best estimate with converged = false on depth exhaustion.
QuadratureResult quadrature_moment(int j, int n, const Real& L,
                                   const QuadratureConfig& cfg,
                                   const PrecisionCtx& ctx);

/// Lowest `count` eigenvalues of the three-point finite-difference
/// discretization of the Schrodinger operator with walls at x = +-L, with one
/// Richardson extrapolation step from grid_n and 2 grid_n - 1 points.
/// Runs in double precision; splitting resolution floor is about 1e-7.
std::vector<double> fd_eigenvalues(const Potential& p, double L, int grid_n,
                                   int count);

}  // namespace specbox
