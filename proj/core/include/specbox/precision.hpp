#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>

namespace specbox {

/// Arbitrary-precision real with runtime-selected precision.
using Real = boost::multiprecision::mpfr_float;

/// Immutable arithmetic context shared by all numeric operations.
/// Every computation in the library runs at the single precision fixed here;
/// there is no mixed-precision refinement anywhere.
struct PrecisionCtx {
  int decimal_digits;  // requested working precision, >= 15
  Real pi;             // pi at decimal_digits
  Real eig_tol;        // off-diagonal convergence threshold, 10^(-decimal_digits+5)
  Real deriv_h;        // default relative finite-difference step for L-derivatives
};

/// Builds a context at the given working precision and makes that precision
/// the thread default, so values constructed afterwards carry it.
/// Throws std::invalid_argument for decimal_digits < 15.
PrecisionCtx make_context(int decimal_digits);

/// Scoped switch of the thread's default mpfr precision. Every public entry
/// point that computes installs one of these so that interleaved use of
/// contexts with different precisions stays correct.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int decimal_digits)
      : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(decimal_digits));
  }
  explicit PrecisionGuard(const PrecisionCtx& ctx)
      : PrecisionGuard(ctx.decimal_digits) {}
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// 10^e at the current default precision.
Real pow10(int e);

}  // namespace specbox
