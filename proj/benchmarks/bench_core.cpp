// Microbenchmarks for the hot paths: orbit iteration, series generation,
// and whole-space scans.

#include <benchmark/benchmark.h>

#include "ifam/rulescan.hpp"
#include "ifam/stats.hpp"

namespace {

using namespace ifam;

const RuleSpec kRule54{2, 2, 54, 2};

void BM_FindCycle(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  std::uint64_t period = 0;
  for (auto _ : state) {
    period = find_cycle(kRule54, window).period;
    benchmark::DoNotOptimize(period);
  }
  state.counters["period"] = static_cast<double>(period);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(period));
}
BENCHMARK(BM_FindCycle)->Arg(10)->Arg(14)->Arg(18)->Arg(22)
    ->Unit(benchmark::kMillisecond);

void BM_GenerateSeries(benchmark::State& state) {
  const auto ticks = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_series(kRule54, 22, ticks));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(ticks));
}
BENCHMARK(BM_GenerateSeries)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22)
    ->Unit(benchmark::kMillisecond);

void BM_Decide(benchmark::State& state) {
  const TransitionTable table = decode_rule(kRule54);
  const HistoryWord word = initial_history(22, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.decide(word.movements));
  }
}
BENCHMARK(BM_Decide);

void BM_ScanRules(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_rules(3, 2, 9, {}, workers));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          46'656);
}
BENCHMARK(BM_ScanRules)->Arg(1)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SummaryTable(benchmark::State& state) {
  const std::vector<std::uint64_t> lengths{32, 1024, 131'072};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        summary_table(kRule54, 22, std::uint64_t{1} << 22, lengths));
  }
}
BENCHMARK(BM_SummaryTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
