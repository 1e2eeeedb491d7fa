#include <benchmark/benchmark.h>

#include "parasl2/cbh.hpp"
#include "parasl2/hopf.hpp"
#include "parasl2/psi.hpp"
#include "parasl2/rmatrix.hpp"
#include "parasl2/sl2_rep.hpp"

using namespace parasl2;

static void BM_PsiPolynomials(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psi_polynomials(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PsiPolynomials)->Arg(4)->Arg(8)->Arg(16);

static void BM_SeriesProduct(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Series a = ts_exp(Rational(1, 3), order), b = ts_exp(Rational(-2, 5), order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesProduct)->Arg(3)->Arg(10)->Arg(30);

static void BM_DefiningRelations(benchmark::State& state) {
  const Spin j = Spin::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_defining_relations(j, Rational(1, 3), 3));
}
BENCHMARK(BM_DefiningRelations)->Arg(1)->Arg(3)->Arg(5);

static void BM_HopfAxioms(benchmark::State& state) {
  const Spin j = Spin::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf_axioms(j, Rational(1, 2), static_cast<int>(state.range(1))));
}
BENCHMARK(BM_HopfAxioms)->Args({1, 1})->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_YangBaxter(benchmark::State& state) {
  const Spin j = Spin::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe(j, Rational(1, 2)));
}
BENCHMARK(BM_YangBaxter)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ExpIdentity(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_exp_identity(Rational(1, 2), Rational(1, 3), r, r));
}
BENCHMARK(BM_ExpIdentity)->Arg(1)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
