#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shellgame/controllers.hpp"
#include "shellgame/ethical_layer.hpp"
#include "shellgame/world.hpp"

namespace shellgame {

struct SimConfig {
    double physics_dt = 1.0 / 30.0;
    int layer_period = 30;  // physics ticks between layer evaluations
    double agent_speed = 0.15;
    double timeout = 60.0;
    double avoidance_threshold = 0.5;
    int velocity_window = 5;

    SigmoidParams sigmoid;
    EnforcementRule enforcement;
    int prediction_horizon = 600;

    void validate() const;
    LayerRules layer_rules() const;
    AvoidanceRule avoidance() const { return {avoidance_threshold}; }
    /// Number of ticks after which a trial times out.
    std::int64_t tick_budget() const;
};

class SimulationFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AgentSnapshot {
    Vec2 position;
    std::optional<ButtonId> goal;
    std::optional<ButtonId> pointing;
};

/// State after the physics tick `tick`; `q` holds the q_n values from the most
/// recent layer evaluation.
struct TraceRecord {
    std::int64_t tick = 0;
    double time = 0.0;
    AgentSnapshot human;
    AgentSnapshot assistant;
    std::optional<BehaviouralAlternative> enforced;  // decided at this tick
    std::array<double, kAlternativeCount> q{};
};

struct PressEvent {
    AgentId agent = AgentId::Human;
    ButtonId button = ButtonId::L;
    std::int64_t tick = 0;
};

enum class Termination { HumanPressed, Timeout };
enum class TrialStatus { Running, HumanPressed, Timeout };

struct TrialResult {
    std::vector<PressEvent> presses;
    RewardLedger ledger;
    Termination termination = Termination::Timeout;
    std::vector<TraceRecord> trace;

    std::optional<ButtonId> pressed_by(AgentId id) const;
    double duration() const { return trace.empty() ? 0.0 : trace.back().time; }
};

/// Mutable per-trial state threaded through step_world.
struct TrialState {
    WorldState world;
    std::deque<Vec2> human_history;
    std::deque<Vec2> assistant_history;
    RewardLedger ledger;
    std::vector<PressEvent> presses;
    std::array<double, kAlternativeCount> last_q{};
};

TrialState start_trial(const ArenaSpec& arena, const TrialSetup& setup, const SimConfig& config);

/// One physics tick: layer (on multiples of layer_period), assistant motion,
/// human motion, then press detection and scoring. Returns the layer decision
/// when the layer ran.
std::optional<LayerDecision> step_world(TrialState& state, std::int64_t tick, const SimConfig& config);

/// `ticks_elapsed` counts completed physics ticks.
TrialStatus termination_check(const WorldState& world, std::int64_t ticks_elapsed, const SimConfig& config);

TrialResult run_trial(const ArenaSpec& arena, const TrialSetup& setup, const SimConfig& config);

}  // namespace shellgame
