#include <doctest.h>

#include <specbox/eigensolve.hpp>
#include <specbox/oracle.hpp>

#include <random>

using namespace specbox;

TEST_CASE("diagonal input converges immediately") {
  auto ctx = make_context(30);
  SymMatrix d(4);
  Real diag[4] = {Real(5), Real(-2), Real(3), Real(0)};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) d.at(i, j) = (i == j) ? diag[i] : Real(0);
  }
  auto r = eig_sym(d, ctx, true);
  CHECK(r.sweeps_used == 0);
  CHECK(r.eigenvalues[0] == -2);
  CHECK(r.eigenvalues[3] == 5);
  CHECK(r.residuals[0] == 0);
}

TEST_CASE("two by two exchange matrix") {
  auto ctx = make_context(40);
  SymMatrix d(2);
  d.at(0, 0) = 0;
  d.at(1, 1) = 0;
  d.at(0, 1) = 1;
  auto r = eig_sym(d, ctx, true);
  CHECK(abs(r.eigenvalues[0] + 1) < ctx.eig_tol * 10);
  CHECK(abs(r.eigenvalues[1] - 1) < ctx.eig_tol * 10);
  // vectors orthonormal
  Real dot = 0, n0 = 0;
  for (int k = 0; k < 2; ++k) {
    dot += r.eigenvectors[0][k] * r.eigenvectors[1][k];
    n0 += r.eigenvectors[0][k] * r.eigenvectors[0][k];
  }
  CHECK(abs(dot) < ctx.eig_tol * 10);
  CHECK(abs(n0 - 1) < ctx.eig_tol * 10);
}

TEST_CASE("random symmetric matrix invariants") {
  auto ctx = make_context(40);
  const int n = 12;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymMatrix d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) d.at(i, j) = Real(u(rng));
  }
  auto r = eig_sym(d, ctx, true);
  REQUIRE((int)r.eigenvalues.size() == n);

  Real trace_sum = 0, sq_sum = 0;
  for (auto& e : r.eigenvalues) {
    trace_sum += e;
    sq_sum += e * e;
  }
  CHECK(abs(trace_sum - d.trace()) < ctx.eig_tol * 100);
  Real fro = d.frobenius_norm();
  CHECK(abs(sq_sum - fro * fro) < ctx.eig_tol * 100);

  for (int i = 0; i < n; ++i) {
    CHECK(r.residuals[i] <= ctx.eig_tol * (1 + abs(r.eigenvalues[i])));
    CHECK((i == 0 || r.eigenvalues[i - 1] <= r.eigenvalues[i]));
  }
  // pairwise orthonormality
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Real dot = 0;
      for (int k = 0; k < n; ++k) {
        dot += r.eigenvectors[a][k] * r.eigenvectors[b][k];
      }
      Real expect = (a == b) ? Real(1) : Real(0);
      CHECK(abs(dot - expect) < ctx.eig_tol * 100);
    }
  }
}

TEST_CASE("tight pair is split exactly") {
  auto ctx = make_context(60);
  SymMatrix d(2);
  Real a("1.5"), e("1e-45");
  d.at(0, 0) = a;
  d.at(1, 1) = a;
  d.at(0, 1) = e;
  auto r = eig_sym(d, ctx);
  Real split = r.eigenvalues[1] - r.eigenvalues[0];
  // the absolute error floor is a few ulps of the diagonal magnitude
  CHECK(abs(split - 2 * e) < Real("1e-58"));
}

TEST_CASE("variational energies against the grid oracle") {
  auto ctx = make_context(30);
  auto p = Potential::quartic(Real(1), Real("0.1"));
  Real L(11);
  BasisSpec spec{BoundaryFamily::Dirichlet, Parity::Even, 40, L};
  auto r = eig_sym(hamiltonian_matrix(p, spec, ctx), ctx);
  auto fd = fd_eigenvalues(p, 11.0, 4001, 2);
  CHECK(abs(r.eigenvalues[0].convert_to<double>() - fd[0]) < 1e-4);
}

TEST_CASE("shared digit counting") {
  make_context(40);
  CHECK(estimate_significant_digits(Real("1.23456"), Real("1.23499"), 12) == 4);
  CHECK(estimate_significant_digits(Real("1.23456"), Real("1.23456"), 12) ==
        12);
  CHECK(estimate_significant_digits(Real("1.5"), Real("-1.5"), 12) == 0);
  CHECK(estimate_significant_digits(Real("1.5"), Real("150"), 12) == 0);
  // carries across a digit boundary still count
  CHECK(estimate_significant_digits(Real("1.0000001"), Real("0.9999999"), 12) >=
        6);
  CHECK(estimate_significant_digits(Real("5.0000001"), Real("4.9999999"), 12) >=
        6);
  CHECK(estimate_significant_digits(Real("3.7"), Real("9.1"), 12) == 0);
}
