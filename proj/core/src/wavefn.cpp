#include "specbox/wavefn.hpp"

namespace specbox {

Real reconstruct(const std::vector<Real>& coeffs, const BasisSpec& spec,
                 const Real& x, const PrecisionCtx& ctx) {
  if (static_cast<int>(coeffs.size()) != spec.n_basis) {
    throw std::invalid_argument(
        "reconstruct: coefficient count does not match the basis");
  }
  PrecisionGuard guard(ctx);
  Real acc = 0;
  for (int i = 0; i < spec.n_basis; ++i) {
    acc += coeffs[i] * basis_value(spec, spec.index_of(i), x, ctx);
  }
  return acc;
}

WavefunctionSamples sample_wavefunction(const std::vector<Real>& coeffs,
                                        const BasisSpec& spec, int level,
                                        int grid_points,
                                        const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx);
  // Sign convention makes samples independent of the eigensolver's
  // arbitrary vector sign.
  Real orientation = 0;
  if (spec.parity == Parity::Even) {
    orientation = reconstruct(coeffs, spec, Real(0), ctx);
  } else {
    // psi'(0) = sum_m A_m (m pi / L) / sqrt(L)
    for (int i = 0; i < spec.n_basis; ++i) {
      orientation += coeffs[i] * spec.frequency_multiplier(spec.index_of(i));
    }
  }
  int flip = orientation < 0 ? -1 : 1;

  WavefunctionSamples samples{{}, {}, level, spec};
  const Real& L = spec.half_width;
  for (int i = 0; i < grid_points; ++i) {
    Real x = -L + 2 * L * i / (grid_points - 1);
    samples.x_grid.push_back(x);
    samples.values.push_back(flip * reconstruct(coeffs, spec, x, ctx));
  }
  return samples;
}

Real norm_squared(const WavefunctionSamples& samples) {
  const auto& x = samples.x_grid;
  const auto& v = samples.values;
  Real acc = 0;
  for (size_t i = 0; i + 1 < x.size(); ++i) {
    acc += (x[i + 1] - x[i]) * (v[i] * v[i] + v[i + 1] * v[i + 1]) / 2;
  }
  return acc;
}

Real sho_ground_reference(const Real& x, const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx);
  return exp(-x * x / 2) / pow(ctx.pi, Real(1) / 4);
}

WavefunctionSamples sho_ground_samples(const WavefunctionSamples& like,
                                       const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx);
  WavefunctionSamples out{like.x_grid, {}, 0, like.spec};
  for (const Real& x : like.x_grid) {
    out.values.push_back(sho_ground_reference(x, ctx));
  }
  return out;
}

L2Difference l2_difference(const WavefunctionSamples& a,
                           const WavefunctionSamples& b) {
  if (a.x_grid.size() != b.x_grid.size()) {
    throw std::invalid_argument("l2_difference: grid size mismatch");
  }
  for (size_t i = 0; i < a.x_grid.size(); ++i) {
    if (a.x_grid[i] != b.x_grid[i]) {
      throw std::invalid_argument("l2_difference: grids differ");
    }
  }
  L2Difference diff;
  for (size_t i = 0; i < a.x_grid.size(); ++i) {
    Real d = a.values[i] - b.values[i];
    diff.delta_sq.push_back(d * d);
  }
  diff.norm = 0;
  for (size_t i = 0; i + 1 < a.x_grid.size(); ++i) {
    diff.norm += (a.x_grid[i + 1] - a.x_grid[i]) *
                 (diff.delta_sq[i] + diff.delta_sq[i + 1]) / 2;
  }
  return diff;
}

}  // namespace specbox
