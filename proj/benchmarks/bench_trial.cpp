#include <benchmark/benchmark.h>

#include "shellgame/engine.hpp"
#include "shellgame/grid.hpp"

namespace {

using namespace shellgame;

static void BM_RunTrial(benchmark::State& state) {
    TrialSetup setup;
    setup.policy = static_cast<DesirabilityPolicy>(state.range(0));
    setup.correct_button = ButtonId::L;
    setup.human_choice = ButtonId::R;
    const ArenaSpec arena;
    const SimConfig config;
    for (auto _ : state) {
        auto r = run_trial(arena, setup, config);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RunTrial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Grid(benchmark::State& state) {
    ExperimentGrid grid;
    grid.replications = 3;
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto records = run_grid(grid, ArenaSpec{}, SimConfig{}, workers);
        benchmark::DoNotOptimize(records);
    }
}
BENCHMARK(BM_Grid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
