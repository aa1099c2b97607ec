#include "specbox/precision.hpp"

#include <mpfr.h>

namespace specbox {

Real pow10(int e) {
  Real ten = 10;
  return pow(ten, e);
}

PrecisionCtx make_context(int decimal_digits) {
  if (decimal_digits < 15) {
    throw std::invalid_argument(
        "make_context: decimal_digits must be at least 15, got " +
        std::to_string(decimal_digits));
  }
  // Deliberately persists: values the caller constructs after making a
  // context carry the context's precision.
  Real::default_precision(static_cast<unsigned>(decimal_digits));
  PrecisionCtx ctx;
  ctx.decimal_digits = decimal_digits;
  ctx.pi = Real();
  mpfr_const_pi(ctx.pi.backend().data(), MPFR_RNDN);
  ctx.eig_tol = pow10(-decimal_digits + 5);
  ctx.deriv_h = Real(1) / 1000;
  return ctx;
}

}  // namespace specbox
