#include <benchmark/benchmark.h>

#include <vector>

#include "domgame/canonical.hpp"
#include "domgame/census.hpp"
#include "domgame/domination.hpp"
#include "domgame/enumerate.hpp"
#include "domgame/families.hpp"
#include "domgame/metrics.hpp"
#include "domgame/solver.hpp"

using namespace domgame;

namespace {

std::vector<Graph> diam2_samples(int n, int count) {
  std::vector<Graph> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
    Graph g = random_graph(n, 1, 2, seed);
    if (is_diam2(g)) out.push_back(std::move(g));
  }
  return out;
}

void BM_PetersenGammaG(benchmark::State& state) {
  const Graph p = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(gamma_g(p));
}
BENCHMARK(BM_PetersenGammaG);

void BM_PetersenDomination(benchmark::State& state) {
  const Graph p = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(domination_number(p));
}
BENCHMARK(BM_PetersenDomination);

// Fresh solver per graph, so the memo never carries over between iterations.
void BM_RandomDiam2GammaG(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SolverOptions options;
  options.prune = state.range(1) != 0;
  const auto graphs = diam2_samples(n, 16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_g(graphs[i++ % graphs.size()], options));
  }
}
BENCHMARK(BM_RandomDiam2GammaG)->ArgsProduct({{16, 22, 30}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? petersen() : cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(6)->Arg(9);

void BM_CensusInternal(benchmark::State& state) {
  census::JobSpec spec;
  spec.source = census::InternalSource{1, static_cast<int>(state.range(0))};
  spec.filters.require_diam2 = true;
  for (auto _ : state) {
    std::uint64_t records = 0;
    census::scan_stream(spec, [&](const census::CensusRecord&) { ++records; });
    benchmark::DoNotOptimize(records);
  }
}
BENCHMARK(BM_CensusInternal)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
