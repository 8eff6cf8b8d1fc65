#include "shellgame/engine.hpp"

#include <cmath>
#include <string>

namespace shellgame {

void SimConfig::validate() const {
    if (!(physics_dt > 0.0) || !std::isfinite(physics_dt)) throw ConfigError("physics_dt must be positive");
    if (layer_period < 1) throw ConfigError("layer_period must be >= 1");
    if (!(agent_speed >= 0.0) || !std::isfinite(agent_speed)) throw ConfigError("agent_speed must be non-negative");
    if (!(timeout > 0.0) || !std::isfinite(timeout)) throw ConfigError("timeout must be positive");
    if (!(avoidance_threshold > 0.0)) throw ConfigError("avoidance_threshold must be positive");
    if (velocity_window < 2) throw ConfigError("velocity_window must be >= 2");
    if (!(sigmoid.beta > 0.0)) throw ConfigError("beta must be positive");
    if (!(enforcement.spread_threshold >= 0.0)) throw ConfigError("spread_threshold must be >= 0");
    if (prediction_horizon < 1) throw ConfigError("prediction_horizon must be >= 1");
}

LayerRules SimConfig::layer_rules() const {
    return {sigmoid, enforcement, PredictionParams{physics_dt, prediction_horizon, avoidance_threshold}};
}

std::int64_t SimConfig::tick_budget() const {
    return static_cast<std::int64_t>(std::ceil(timeout / physics_dt - 1e-9));
}

std::optional<ButtonId> TrialResult::pressed_by(AgentId id) const {
    for (const auto& p : presses) {
        if (p.agent == id) return p.button;
    }
    return std::nullopt;
}

TrialState start_trial(const ArenaSpec& arena, const TrialSetup& setup, const SimConfig& config) {
    config.validate();
    TrialState s;
    s.world = initial_world(arena, setup, config.agent_speed);
    s.human_history.push_back(s.world.human.position);
    s.assistant_history.push_back(s.world.assistant.position);
    return s;
}

namespace {

void record_position(std::deque<Vec2>& history, AgentState& agent, const SimConfig& config) {
    history.push_back(agent.position);
    while (history.size() > static_cast<std::size_t>(config.velocity_window)) {
        history.pop_front();
    }
    if (history.size() >= 2) {
        const std::vector<Vec2> window(history.begin(), history.end());
        agent.velocity_estimate = estimate_velocity(window, config.physics_dt);
    }
}

}  // namespace

std::optional<LayerDecision> step_world(TrialState& state, std::int64_t tick, const SimConfig& config) {
    WorldState& w = state.world;
    const AvoidanceRule avoidance = config.avoidance();

    std::optional<LayerDecision> decision;
    if (tick % config.layer_period == 0) {
        decision = layer_tick(w, w.setup.policy, config.layer_rules());
        state.last_q = decision->q_n();
    }

    w.assistant = assistant_apply(w, decision ? decision->enforced : std::nullopt,
                                  config.physics_dt, avoidance);
    w.human = human_step(w, config.physics_dt, avoidance);

    if (!w.human.position.finite() || !w.assistant.position.finite()) {
        throw SimulationFault("non-finite agent position at tick " + std::to_string(tick));
    }

    record_position(state.human_history, w.human, config);
    record_position(state.assistant_history, w.assistant, config);

    while (auto press = detect_press(w)) {
        w.agent(press->agent).pressed = press->button;
        state.ledger = score_press(w.setup, *press, state.ledger);
        state.presses.push_back({press->agent, press->button, tick});
    }
    return decision;
}

TrialStatus termination_check(const WorldState& world, std::int64_t ticks_elapsed, const SimConfig& config) {
    if (world.human.pressed) return TrialStatus::HumanPressed;
    if (ticks_elapsed >= config.tick_budget()) return TrialStatus::Timeout;
    return TrialStatus::Running;
}

TrialResult run_trial(const ArenaSpec& arena, const TrialSetup& setup, const SimConfig& config) {
    TrialState state = start_trial(arena, setup, config);
    TrialResult result;
    result.trace.reserve(static_cast<std::size_t>(config.tick_budget()));

    for (std::int64_t tick = 0;; ++tick) {
        const auto decision = step_world(state, tick, config);

        const WorldState& w = state.world;
        TraceRecord rec;
        rec.tick = tick;
        rec.time = static_cast<double>(tick) * config.physics_dt;
        rec.human = {w.human.position, w.human.goal, std::nullopt};
        rec.assistant = {w.assistant.position, w.assistant.goal, w.assistant.pointing_at};
        rec.enforced = decision ? decision->enforced : std::nullopt;
        rec.q = state.last_q;
        result.trace.push_back(rec);

        const TrialStatus status = termination_check(w, tick + 1, config);
        if (status != TrialStatus::Running) {
            result.termination =
                status == TrialStatus::HumanPressed ? Termination::HumanPressed : Termination::Timeout;
            break;
        }
    }
    result.presses = std::move(state.presses);
    result.ledger = state.ledger;
    return result;
}

}  // namespace shellgame
