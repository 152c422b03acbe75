#include <benchmark/benchmark.h>

#include "rookrep/grothendieck.hpp"
#include "rookrep/jucysmurphy.hpp"
#include "rookrep/monoid.hpp"
#include "rookrep/seminormal.hpp"

using namespace rookrep;

static void BM_EnumerateElements(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_elements(n, 2));
}
BENCHMARK(BM_EnumerateElements)->DenseRange(2, 4);

static void BM_RookIrrep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multipartition lambda{{2, 1}, {1}};
  for (auto _ : state) benchmark::DoNotOptimize(rook_irrep(lambda, n));
}
BENCHMARK(BM_RookIrrep)->DenseRange(4, 6);

static void BM_JmElements(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jm_elements(n, 2));
}
BENCHMARK(BM_JmElements)->DenseRange(2, 3);

static void BM_JmSpectrum(benchmark::State& state) {
  const Representation rep = rook_irrep({{2}, {1}}, 3);
  const JmFamily jm = jm_elements(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(jm_spectrum(rep, jm));
}
BENCHMARK(BM_JmSpectrum);

static void BM_LieRelations(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lie_relation_check(p, 6));
}
BENCHMARK(BM_LieRelations)->Arg(2)->Arg(3);

static void BM_LrCoefficient(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient({4, 3, 2, 1}, {3, 1}, {3, 2, 1}));
}
BENCHMARK(BM_LrCoefficient);

BENCHMARK_MAIN();
