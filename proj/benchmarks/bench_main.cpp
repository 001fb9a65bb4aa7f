#include <benchmark/benchmark.h>

#include <array>

#include "polydisc/cns.hpp"
#include "polydisc/diophantine.hpp"
#include "polydisc/equivalence.hpp"
#include "polydisc/factor.hpp"
#include "polydisc/hermite.hpp"
#include "polydisc/quadforms.hpp"
#include "polydisc/reduction.hpp"

using namespace polydisc;

static void BM_Discriminant(benchmark::State& st) {
  IntPoly f = parse_poly("3*x^6 - 17*x^5 + 4*x^3 - 20*x + 11");
  for (auto _ : st) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_Discriminant);

static void BM_ApplyGl2(benchmark::State& st) {
  IntPoly f = parse_poly("3*x^6 - 17*x^5 + 4*x^3 - 20*x + 11");
  Unimodular2 u{2, 3, 1, 2, 1};
  for (auto _ : st) benchmark::DoNotOptimize(apply_gl2(f, u));
}
BENCHMARK(BM_ApplyGl2);

static void BM_Factor(benchmark::State& st) {
  IntPoly f = parse_poly("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576");
  for (auto _ : st) benchmark::DoNotOptimize(factor_over_z(f));
}
BENCHMARK(BM_Factor);

static void BM_GaussReduce(benchmark::State& st) {
  IntBQF q{1000003, 1999999, 1000000};
  for (auto _ : st) benchmark::DoNotOptimize(gauss_reduce(q));
}
BENCHMARK(BM_GaussReduce);

static void BM_ReducePolynomial(benchmark::State& st) {
  IntPoly f = parse_poly("7*x^5 + 30*x^4 - 17*x^3 + 2*x^2 - 9*x + 41");
  for (auto _ : st) benchmark::DoNotOptimize(reduce_polynomial(f, st.range(0)));
}
BENCHMARK(BM_ReducePolynomial)->Arg(128)->Arg(256)->Arg(1024);

static void BM_ReduceCubicFast(benchmark::State& st) {
  std::array<long long, 4> f{2, -17, 30, 7};
  FastCubicReduction out;
  for (auto _ : st) benchmark::DoNotOptimize(reduce_cubic_fast(f, &out));
}
BENCHMARK(BM_ReduceCubicFast);

static void BM_HermiteEquivalent(benchmark::State& st) {
  IntPoly f = parse_poly("2*x^3 + x - 1");
  IntPoly g = apply_gl2(f, Unimodular2{2, 1, 1, 1, 1});
  for (auto _ : st) benchmark::DoNotOptimize(hermite_equivalent(f, g));
}
BENCHMARK(BM_HermiteEquivalent);

static void BM_GeneratorsCubic(benchmark::State& st) {
  NumberField K(parse_poly("x^3 - x^2 - 2*x + 1"));
  IndexForm idx = index_form(K, invariant_order(K));
  for (auto _ : st) benchmark::DoNotOptimize(generators_of_order(K, idx, st.range(0)));
}
BENCHMARK(BM_GeneratorsCubic)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_CnsClosure(benchmark::State& st) {
  CnsBase b = make_cns_base(parse_poly("x^3 + 3*x^2 + 3*x + 3"));
  for (auto _ : st) benchmark::DoNotOptimize(is_cns_base(b));
}
BENCHMARK(BM_CnsClosure);

BENCHMARK_MAIN();
