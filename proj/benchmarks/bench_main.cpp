#include <benchmark/benchmark.h>

#include <random>

#include "weightsys/hopf.hpp"
#include "weightsys/linalg.hpp"
#include "weightsys/relations.hpp"
#include "weightsys/schur.hpp"
#include "weightsys/wgl.hpp"
#include "weightsys/wso.hpp"

namespace {

using namespace weightsys;

// A fresh engine per iteration so the memo does not carry over.
void BM_GlStandardCycleInverse(benchmark::State& state) {
  const Permutation alpha = Permutation::standard_cycle(static_cast<int>(state.range(0))).inverse();
  for (auto _ : state) {
    GlEngine engine;
    benchmark::DoNotOptimize(engine.eval(alpha));
  }
}
BENCHMARK(BM_GlStandardCycleInverse)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_GlAllOfSm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GlEngine engine;
    for_each_permutation(m, [&](const Permutation& a) { benchmark::DoNotOptimize(engine.eval(a)); });
  }
}
BENCHMARK(BM_GlAllOfSm)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_SoAllOfSm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SoEngine engine;
    for_each_permutation(m, [&](const Permutation& a) { benchmark::DoNotOptimize(engine.eval(a)); });
  }
}
BENCHMARK(BM_SoAllOfSm)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SoStateSum(benchmark::State& state) {
  const Permutation alpha = Permutation::standard_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(so_state_sum(alpha));
}
BENCHMARK(BM_SoStateSum)->DenseRange(6, 12, 3);

void BM_ExactRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution present(0.3);
  std::vector<SparseRow> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) {
    for (int j = 0; j < n; ++j) {
      if (present(rng)) {
        const int v = entry(rng);
        if (v != 0) row.emplace_back(j, Integer(v));
      }
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(rows));
}
BENCHMARK(BM_ExactRank)->RangeMultiplier(2)->Range(16, 128);

void BM_CheckRelationsGl(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_functional([](const Permutation& a) { return eval_wgl(a); }, m).ok());
  }
}
BENCHMARK(BM_CheckRelationsGl)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_DiagramSpace(benchmark::State& state) {
  const Partition lambda({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  for (auto _ : state) benchmark::DoNotOptimize(DiagramSpace(lambda).primitive_dim());
}
BENCHMARK(BM_DiagramSpace)->Args({3, 3})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_RotationalDims(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rotational_dims(m, {2, 3}, SignFilter::any));
}
BENCHMARK(BM_RotationalDims)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_BasisTable(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_basis_table(order));
}
BENCHMARK(BM_BasisTable)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
