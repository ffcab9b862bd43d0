#include <benchmark/benchmark.h>

#include <map>

#include "heckerep/exactnum/exact_matrix.hpp"
#include "heckerep/rep_genus2/matrices.hpp"

namespace {

using namespace heckerep;

const ExactMatrix& jplain_at(int level) {
  static std::map<int, ExactMatrix> cache;
  auto it = cache.find(level);
  if (it == cache.end()) it = cache.emplace(level, j_plain(TheoryParams::unitary(level))).first;
  return it->second;
}

void BM_MultiplyReference(benchmark::State& state) {
  const ExactMatrix& j = jplain_at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_reference(j, j));
  state.counters["dim"] = static_cast<double>(j.rows());
}

void BM_MultiplyModular(benchmark::State& state) {
  const ExactMatrix& j = jplain_at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(j, j));
  state.counters["dim"] = static_cast<double>(j.rows());
}

void BM_AssembleJtilde(benchmark::State& state) {
  const TheoryParams p = TheoryParams::unitary(static_cast<int>(state.range(0)));
  jtilde(p);  // warm the recoupling caches
  for (auto _ : state) benchmark::DoNotOptimize(jtilde_uncached(p));
}

void BM_AssembleJtildeReference(benchmark::State& state) {
  const TheoryParams p = TheoryParams::unitary(static_cast<int>(state.range(0)));
  jtilde(p);
  for (auto _ : state) benchmark::DoNotOptimize(jtilde_reference(p));
}

}  // namespace

BENCHMARK(BM_MultiplyReference)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyModular)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleJtilde)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleJtildeReference)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
