#include <doctest.h>

#include <specbox/potential.hpp>

using namespace specbox;

TEST_CASE("quartic evaluation") {
  auto ctx = make_context(40);
  auto p = Potential::quartic(Real(1), Real("0.01"));
  CHECK(p(Real(0)) == 0);
  // minimum of -x^2 + 0.01 x^4 sits at x^2 = 50 with depth -25
  CHECK(abs(p(sqrt(Real(50))) + 25) < Real("1e-30"));
  auto w = Potential::quartic(Real(1), Real(1));
  CHECK(abs(w(Real(1))) < Real("1e-35"));
  CHECK(abs(w(Real(2)) - 12) < Real("1e-30"));
}

TEST_CASE("even parity holds exactly") {
  auto ctx = make_context(30);
  Potential p({{2, Real("-3.5")}, {4, Real("0.25")}, {6, Real("0.125")}});
  for (const char* xs : {"0.3", "1.7", "4.25", "9.125"}) {
    Real x(xs);
    CHECK(p(x) == p(-x));
    CHECK(p.derivative(x) == -p.derivative(-x));
  }
}

TEST_CASE("invalid coefficient maps rejected") {
  make_context(30);
  CHECK_THROWS_AS(Potential({{3, Real(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(Potential({{0, Real(1)}, {4, Real(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Potential({{2, Real(1)}, {4, Real(-1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Potential({}), std::invalid_argument);
  CHECK_NOTHROW(Potential({{2, Real(1)}}));
}

TEST_CASE("derivative against finite differences") {
  auto ctx = make_context(50);
  Potential p({{2, Real(-2)}, {4, Real("0.3")}, {8, Real("0.001")}});
  Real h("1e-15");
  for (const char* xs : {"0.5", "1.25", "3.0"}) {
    Real x(xs);
    Real fd = (p(x + h) - p(x - h)) / (2 * h);
    CHECK(abs(fd - p.derivative(x)) < Real("1e-15") * (1 + abs(fd)));
  }
}

TEST_CASE("double well detection") {
  make_context(30);
  CHECK(Potential::quartic(Real(1), Real("0.03")).is_double_well_quartic());
  CHECK_FALSE(Potential({{4, Real(1)}}).is_double_well_quartic());
  CHECK_FALSE(Potential({{2, Real(1)}}).is_double_well_quartic());
  // positive x^2 coefficient: single well
  CHECK_FALSE(
      Potential({{2, Real(1)}, {4, Real(1)}}).is_double_well_quartic());
}

TEST_CASE("scaling map to the reduced form") {
  make_context(40);
  auto m = reduce(Real(4), Real("0.08"));
  CHECK(abs(m.beta - Real("0.01")) < Real("1e-35"));
  CHECK(abs(m.energy_factor - 2) < Real("1e-35"));
  CHECK(abs(m.length_factor - 1 / sqrt(sqrt(Real(4)))) < Real("1e-35"));
  // E scales as k^(1/2), L as k^(-1/4): product of E and L^2 is invariant
  CHECK(abs(m.energy_factor * m.length_factor * m.length_factor - 1) <
        Real("1e-35"));

  auto id = reduce(Real(1), Real("0.03"));
  CHECK(id.beta == Real("0.03"));
  CHECK(id.energy_factor == 1);

  CHECK_THROWS_AS(reduce(Real(0), Real(1)), std::invalid_argument);
  CHECK_THROWS_AS(reduce(Real(1), Real(-1)), std::invalid_argument);

  auto rp = reduced_potential(m);
  CHECK(rp.quartic_k() == 1);
  CHECK(abs(rp.quartic_lambda() - Real("0.01")) < Real("1e-35"));
}

TEST_CASE("rightmost stationary point") {
  auto ctx = make_context(40);
  auto p = Potential::quartic(Real(1), Real("0.01"));
  // V' = -2x + 0.04 x^3 = 0 at x = sqrt(50)
  CHECK(abs(p.rightmost_stationary_point(ctx) - sqrt(Real(50))) <
        Real("1e-30"));
  Potential mono({{2, Real(1)}, {4, Real(1)}});
  CHECK(mono.rightmost_stationary_point(ctx) == 0);
  CHECK(mono.min_value(ctx) == 0);
  CHECK(abs(p.min_value(ctx) + 25) < Real("1e-30"));
}

TEST_CASE("outer turning point") {
  auto ctx = make_context(40);
  auto sho = Potential({{2, Real(1)}});
  CHECK(abs(outer_turning_point(sho, Real(1), ctx) - 1) < Real("1e-30"));
  CHECK(abs(outer_turning_point(sho, Real(9), ctx) - 3) < Real("1e-30"));

  auto p = Potential::quartic(Real(1), Real("0.03"));
  Real e("-6.95073188927955191828148104931");
  // closed form x^2 = (1 + sqrt(1 + 4 lambda E)) / (2 lambda)
  Real lam("0.03");
  Real exact = sqrt((1 + sqrt(1 + 4 * lam * e)) / (2 * lam));
  CHECK(abs(outer_turning_point(p, e, ctx) - exact) < Real("1e-28"));

  // at E = 0 the turning point is the outer zero x = sqrt(k/lambda)
  CHECK(abs(outer_turning_point(p, Real(0), ctx) - sqrt(1 / lam)) <
        Real("1e-28"));

  // monotone in E above the well floor
  Real a = outer_turning_point(p, Real(-2), ctx);
  Real b = outer_turning_point(p, Real(3), ctx);
  CHECK(a < b);

  CHECK_THROWS_AS(outer_turning_point(p, Real(-100), ctx), std::domain_error);
}
