#include <benchmark/benchmark.h>

#include <specbox/eigensolve.hpp>

using namespace specbox;

namespace {

SymMatrix well_matrix(int n, int digits) {
  auto ctx = make_context(digits);
  auto p = Potential::quartic(Real(1), Real("0.03"));
  BasisSpec spec{BoundaryFamily::Periodic, Parity::Even, n, Real("13.60979")};
  return hamiltonian_matrix(p, spec, ctx);
}

void BM_CosineMoment(benchmark::State& state) {
  auto ctx = make_context(static_cast<int>(state.range(0)));
  Real L("13.60979");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cosine_moment(4, 50, L, ctx));
  }
}
BENCHMARK(BM_CosineMoment)->Arg(40)->Arg(120);

void BM_Assembly(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int digits = static_cast<int>(state.range(1));
  auto ctx = make_context(digits);
  auto p = Potential::quartic(Real(1), Real("0.03"));
  BasisSpec spec{BoundaryFamily::Periodic, Parity::Even, n, Real("13.60979")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamiltonian_matrix(p, spec, ctx));
  }
}
BENCHMARK(BM_Assembly)->Args({40, 40})->Args({100, 120});

void BM_Jacobi(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int digits = static_cast<int>(state.range(1));
  auto ctx = make_context(digits);
  auto d = well_matrix(n, digits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_sym(d, ctx));
  }
}
BENCHMARK(BM_Jacobi)
    ->Unit(benchmark::kMillisecond)
    ->Args({20, 40})
    ->Args({40, 40})
    ->Args({100, 120});

}  // namespace

BENCHMARK_MAIN();
