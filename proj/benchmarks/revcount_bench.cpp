#include "revcount/generators.hpp"
#include "revcount/metrics.hpp"
#include "revcount/netlist_format.hpp"
#include "revcount/verify.hpp"

#include <benchmark/benchmark.h>

using namespace revcount;

namespace {

CounterMode mode_of(benchmark::State const& state)
{
  return state.range(1) ? CounterMode::Sync : CounterMode::Async;
}

void BM_BuildAndMeasure(benchmark::State& state)
{
  CounterSpec const spec{static_cast<std::size_t>(state.range(0)), mode_of(state)};
  for (auto _ : state) {
    auto const report = measure(flatten(build_counter(spec)));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_BuildAndMeasure)->ArgsProduct({{4, 16, 64}, {0, 1}});

void BM_Run(benchmark::State& state)
{
  auto const circuit = build_counter({static_cast<std::size_t>(state.range(0)), mode_of(state)});
  std::size_t const pulses = 256;
  for (auto _ : state) {
    auto states = run(circuit, pulses);
    benchmark::DoNotOptimize(states);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pulses));
}
BENCHMARK(BM_Run)->ArgsProduct({{4, 8, 16}, {0, 1}});

void BM_CheckReversible(benchmark::State& state)
{
  auto const core = flatten(build_counter({static_cast<std::size_t>(state.range(0)), mode_of(state)}));
  for (auto _ : state) {
    auto report = check_reversible(core);
    benchmark::DoNotOptimize(report);
  }
  state.SetLabel(std::to_string(core.free_lines().size()) + " free inputs");
}
BENCHMARK(BM_CheckReversible)->ArgsProduct({{2, 4, 6}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_ParseSerialize(benchmark::State& state)
{
  auto const text = serialize(build_counter({static_cast<std::size_t>(state.range(0)), CounterMode::Sync}));
  for (auto _ : state) {
    auto circuit = parse_circuit(text);
    benchmark::DoNotOptimize(circuit);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseSerialize)->Arg(4)->Arg(64);

} // namespace

BENCHMARK_MAIN();
