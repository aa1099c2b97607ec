#pragma once

#include "specbox/eigensolve.hpp"

namespace specbox {

/// Eigenfunction sampled on a uniform grid over [-L, L], sign-normalized so
/// that even states have psi(0) > 0 and odd states psi'(0) > 0.
struct WavefunctionSamples {
  std::vector<Real> x_grid;
  std::vector<Real> values;
  int level;
  BasisSpec spec;
};

/// psi(x) = sum_m A_m phi_m(x). Throws std::invalid_argument on a coefficient
/// count mismatch.
Real reconstruct(const std::vector<Real>& coeffs, const BasisSpec& spec,
                 const Real& x, const PrecisionCtx& ctx);

/// Samples the reconstruction on a uniform grid (default 2001 points) and
/// applies the sign convention.
WavefunctionSamples sample_wavefunction(const std::vector<Real>& coeffs,
                                        const BasisSpec& spec, int level,
                                        int grid_points,
                                        const PrecisionCtx& ctx);

/// Trapezoid quadrature of |psi|^2 over the sample grid.
Real norm_squared(const WavefunctionSamples& samples);

/// Ground state of the dimensionless harmonic oscillator V = x^2 (E_n = 2n+1):
/// pi^(-1/4) exp(-x^2/2).
Real sho_ground_reference(const Real& x, const PrecisionCtx& ctx);

/// Samples the exact SHO ground state on the same grid as `like`.
WavefunctionSamples sho_ground_samples(const WavefunctionSamples& like,
                                       const PrecisionCtx& ctx);

struct L2Difference {
  std::vector<Real> delta_sq;  // |a - b|^2 per grid point
  Real norm;                   // its trapezoid integral
};

/// Pointwise squared difference of two sample sets on identical grids.
L2Difference l2_difference(const WavefunctionSamples& a,
                           const WavefunctionSamples& b);

}  // namespace specbox
