#include "specbox/basis.hpp"

namespace specbox {

namespace {
void check_index(const BasisSpec& spec, int m) {
  if (!spec.index_in_range(m)) {
    throw std::out_of_range("basis index " + std::to_string(m) +
                            " outside the family's range");
  }
}
}  // namespace

Real basis_value(const BasisSpec& spec, int m, const Real& x,
                 const PrecisionCtx& ctx) {
  check_index(spec, m);
  PrecisionGuard guard(ctx);
  Real arg = spec.frequency_multiplier(m) * ctx.pi * x / spec.half_width;
  Real norm = 1 / sqrt(spec.half_width);
  if (spec.parity == Parity::Odd) {
    return sin(arg) * norm;
  }
  return spec.weight(m) * cos(arg) * norm;
}

Real kinetic_eigenvalue(const BasisSpec& spec, int m, const PrecisionCtx& ctx) {
  check_index(spec, m);
  PrecisionGuard guard(ctx);
  Real w = spec.frequency_multiplier(m) * ctx.pi / spec.half_width;
  return w * w;
}

}  // namespace specbox
