#include <benchmark/benchmark.h>

#include "bres/bresinsky.hpp"
#include "bres/toric.hpp"
#include "bres/verifier.hpp"

using namespace bres;

static void BM_Generators(benchmark::State& st) {
  auto inst = make_instance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(generators(inst));
}
BENCHMARK(BM_Generators)->DenseRange(4, 20, 8);

static void BM_Buchberger(benchmark::State& st) {
  auto gens = generators(make_instance(st.range(0))).polys;
  for (auto _ : st) benchmark::DoNotOptimize(buchberger(gens));
  st.SetLabel(std::to_string(gens.size()) + " generators");
}
BENCHMARK(BM_Buchberger)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_GbCheck(benchmark::State& st) {
  auto gens = generators(make_instance(st.range(0))).polys;
  for (auto _ : st) benchmark::DoNotOptimize(gb_check(gens));
}
BENCHMARK(BM_GbCheck)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_OracleElimination(benchmark::State& st) {
  auto inst = make_instance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(toric_ideal_elimination(inst.semigroup(), MonomialOrder::curve_lex()));
}
BENCHMARK(BM_OracleElimination)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_OracleLattice(benchmark::State& st) {
  auto inst = make_instance(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(toric_ideal_lattice(inst.semigroup(), MonomialOrder::curve_lex()));
}
BENCHMARK(BM_OracleLattice)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ProductNP(benchmark::State& st) {
  auto inst = make_instance(st.range(0));
  auto N = matrix_N(inst);
  auto P = matrix_P(inst);
  for (auto _ : st) benchmark::DoNotOptimize(N * P);
}
BENCHMARK(BM_ProductNP)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

static void BM_VerifyAll(benchmark::State& st) {
  auto inst = make_instance(st.range(0));
  VerifyConfig cfg;
  cfg.allow_large_oracle = true;
  for (auto _ : st) benchmark::DoNotOptimize(verify(inst, cfg));
}
BENCHMARK(BM_VerifyAll)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
