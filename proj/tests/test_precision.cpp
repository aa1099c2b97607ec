#include <doctest.h>

#include <specbox/precision.hpp>

using namespace specbox;

namespace {

// 140 digits, more than any context requested here
const char* kPi140 =
    "3.141592653589793238462643383279502884197169399375105820974944592307816406"
    "2862089986280348253421170679821480865132823066470938446095505822317";

}  // namespace

TEST_CASE("context carries derived tolerances") {
  auto ctx = make_context(15);
  CHECK(ctx.decimal_digits == 15);
  CHECK(ctx.eig_tol <= Real("1e-10"));
  CHECK(ctx.eig_tol > 0);
  CHECK(ctx.deriv_h > 0);

  auto wide = make_context(80);
  CHECK(wide.eig_tol <= Real("1e-75"));
}

TEST_CASE("minimum precision enforced") {
  CHECK_THROWS_AS(make_context(14), std::invalid_argument);
  CHECK_THROWS_AS(make_context(0), std::invalid_argument);
  CHECK_THROWS_AS(make_context(-3), std::invalid_argument);
}

TEST_CASE("pi matches reference digits") {
  for (int digits : {20, 50, 120}) {
    auto ctx = make_context(digits);
    Real ref(kPi140);
    Real err = abs(ctx.pi - ref) / ref;
    CHECK(err < pow10(-digits + 2));
  }
}

TEST_CASE("default precision follows the context") {
  make_context(90);
  Real x("1.1");
  // 90-digit default: squaring error stays near that scale
  Real y = x * x;
  CHECK(abs(y - Real("1.21")) < Real("1e-85"));

  {
    PrecisionGuard guard(30);
    CHECK(Real::default_precision() == 30);
  }
  CHECK(Real::default_precision() == 90);
}

TEST_CASE("pow10 exact at round exponents") {
  make_context(40);
  CHECK(pow10(0) == 1);
  CHECK(pow10(3) == 1000);
  CHECK(abs(pow10(-25) * Real("1e25") - 1) < Real("1e-35"));
}
