// Serial reference vs OpenMP kernels for the categorical action.

#include <benchmark/benchmark.h>

#include <random>

#include "cellcat/braid.hpp"
#include "cellcat/recovery.hpp"

using namespace cellcat;

namespace {

struct Fixture {
  explicit Fixture(const char* type)
      : sys(CoxeterMatrix::named(type)), graph(CellGraph::build(sys, CellGraph::default_base(sys.matrix()))) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> gen(0, sys.rank() - 1);
    for (int i = 0; i < 32; ++i) {
      PositiveWord w(10);
      for (auto& g : w) g = gen(rng);
      words.push_back(w);
    }
  }
  CoxeterSystem sys;
  CellGraph graph;
  std::vector<PositiveWord> words;
};

Fixture& fixture(int which) {
  static Fixture h3("H3"), a4("A4"), i8("I2:8");
  return which == 0 ? h3 : which == 1 ? a4 : i8;
}

const char* kNames[] = {"H3", "A4", "I2:8"};

// One action per word: the per-vertex streams are the parallel axis.
void BM_Act(benchmark::State& state, Exec exec) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state)
    for (const auto& w : f.words) benchmark::DoNotOptimize(act_positive(f.graph, w, exec));
}

void BM_Recover(benchmark::State& state, Exec exec) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state)
    for (const auto& w : f.words) benchmark::DoNotOptimize(recover(f.graph, w, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Act, serial, Exec::Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Act, parallel, Exec::Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Recover, serial, Exec::Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Recover, parallel, Exec::Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
