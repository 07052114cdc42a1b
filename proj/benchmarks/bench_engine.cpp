#include <benchmark/benchmark.h>

#include "wzt/harness.hpp"
#include "wzt/instances.hpp"
#include "wzt/tree_diagram.hpp"

namespace {

void BM_diagram_multiply(benchmark::State& state) {
  const wzt::CloningSystem& sys = wzt::find_instance("bv");
  wzt::RandomGen gen(23);
  std::vector<wzt::TreeDiagram> diagrams;
  for (int i = 0; i < 64; ++i)
    diagrams.push_back(wzt::random_diagram(sys, static_cast<int>(state.range(0)), 10, gen));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wzt::multiply(diagrams[i % diagrams.size()], diagrams[(i + 1) % diagrams.size()]));
    ++i;
  }
}
BENCHMARK(BM_diagram_multiply)->Arg(3)->Arg(5)->Arg(7);

void BM_diagram_compare(benchmark::State& state) {
  const wzt::CloningSystem& sys = wzt::find_instance("bv");
  wzt::RandomGen gen(29);
  std::vector<wzt::TreeDiagram> diagrams;
  for (int i = 0; i < 64; ++i)
    diagrams.push_back(wzt::random_diagram(sys, static_cast<int>(state.range(0)), 8, gen));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wzt::compare(diagrams[i % diagrams.size()], diagrams[(i + 1) % diagrams.size()]));
    ++i;
  }
}
BENCHMARK(BM_diagram_compare)->Arg(3)->Arg(5);

void BM_axiom_suite(benchmark::State& state) {
  for (auto _ : state) {
    wzt::TrialConfig cfg;
    cfg.instance = "bv";
    cfg.suite = "axioms";
    cfg.trials = static_cast<int>(state.range(0));
    cfg.max_degree = 5;
    cfg.size_bound = 10;
    cfg.seed = 31;
    benchmark::DoNotOptimize(wzt::run_suite(cfg));
  }
}
BENCHMARK(BM_axiom_suite)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
