#pragma once

#include <optional>

#include "specbox/eigensolve.hpp"

namespace specbox {

enum class CandidateKind { Inflection, Minimum };

struct ScanCandidate {
  Real L;
  CandidateKind kind;
  Real abs_d1;
};

/// Sampled E_level(L) curve. d1/d2 are central-difference estimates on the
/// interior grid points L_grid[1..points-2].
struct ScanResult {
  std::vector<Real> L_grid;
  std::vector<Real> energies;
  std::vector<Real> d1;
  std::vector<Real> d2;
  std::vector<ScanCandidate> candidates;
  std::optional<Real> chosen;
  std::optional<Real> chosen_energy;
};

struct OptimizeOptions {
  int level = 0;
  int points = 60;
  /// Scan interval override; default is [1.05 L_c, 4 L_c] with L_c the
  /// classical turning point at a coarse energy estimate.
  std::optional<Real> L_min;
  std::optional<Real> L_max;
};

/// Scan floor: the classical turning point of the potential at a coarse
/// level-energy estimate from one cheap solve at a generous half-width.
Real classical_scan_floor(const Potential& p, BoundaryFamily family,
                          Parity parity, int n_basis, int level,
                          const PrecisionCtx& ctx);

/// Samples E_level(L) over [L_min, L_max] (assembling and diagonalizing at
/// every grid point) and records derivative estimates and candidate optima:
/// curvature sign changes for the periodic family, local minima for Dirichlet.
ScanResult scan_energy(const Potential& p, BoundaryFamily family, Parity parity,
                       int n_basis, int level, const Real& L_min,
                       const Real& L_max, int points, const PrecisionCtx& ctx);

struct OptimalL {
  Real L_hat;
  Real energy;
  ScanResult scan;
};

/// The domain-size selection protocol. Periodic: among curvature sign changes
/// on L > L_c pick the flattest (minimal |dE/dL|) and refine by bisection on
/// the five-point curvature until the bracket is below 1e-6; spurious shallow
/// minima never qualify since they are not curvature sign changes. Dirichlet:
/// golden-section refinement of the grid minimum of E(L).
/// Quartic double wells with k != 1 are solved in the reduced k = 1 form and
/// mapped back, so results obey the scaling relations exactly.
/// Throws std::runtime_error when no candidate lies inside the scan range.
OptimalL find_optimal_L(const Potential& p, BoundaryFamily family,
                        Parity parity, int n_basis, const PrecisionCtx& ctx,
                        const OptimizeOptions& opts = {});

}  // namespace specbox
