#include <benchmark/benchmark.h>

#include "shellgame/engine.hpp"
#include "shellgame/ethical_layer.hpp"

namespace {

using namespace shellgame;

// Human one second into her walk toward the wrong button.
WorldState walking_snapshot() {
    TrialSetup setup;
    setup.correct_button = ButtonId::L;
    setup.human_choice = ButtonId::R;
    WorldState w = initial_world(ArenaSpec{}, setup);
    const Vec2 dir = (w.arena.button(ButtonId::R) - w.human.position) / distance(w.human.position, w.arena.button(ButtonId::R));
    w.human.position = w.human.position + dir * 0.15;
    w.human.velocity_estimate = dir * 0.15;
    return w;
}

static void BM_LayerTick(benchmark::State& state) {
    const WorldState w = walking_snapshot();
    const LayerRules rules = SimConfig{}.layer_rules();
    for (auto _ : state) {
        auto d = layer_tick(w, DesirabilityPolicy::Ethical, rules);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_LayerTick);

static void BM_PredictOutcome(benchmark::State& state) {
    const WorldState w = walking_snapshot();
    const PredictionParams params{1.0 / 30.0, static_cast<int>(state.range(0)), 0.5};
    for (auto _ : state) {
        auto o = predict_outcome(w, BehaviouralAlternative::GoToR, ButtonId::R, params);
        benchmark::DoNotOptimize(o);
    }
}
BENCHMARK(BM_PredictOutcome)->Arg(150)->Arg(600)->Arg(2400);

}  // namespace
