#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "shellgame/behaviour.hpp"
#include "shellgame/geometry.hpp"

namespace shellgame {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rectangular arena centred on the origin, x in [-width/2, width/2] and
/// y in [-height/2, height/2].
struct ArenaSpec {
    double width = 3.0;
    double height = 2.5;
    std::array<Vec2, 2> buttons{Vec2{-0.5, 0.6}, Vec2{0.5, 0.6}};  // indexed by ButtonId
    double press_radius = 0.1;
    Vec2 human_start{0.0, -0.8};
    Vec2 assistant_start{0.0, 0.9};

    Vec2 button(ButtonId b) const { return buttons[static_cast<std::size_t>(b)]; }
    bool contains(Vec2 p) const;
    /// Throws ConfigError when any invariant is violated.
    void validate() const;
};

/// Speeds below this (m/s) count as standing still.
inline constexpr double kMinimumSpeed = 0.01;

enum class AgentId : std::uint8_t { Human, Assistant };

struct TrialSetup {
    ButtonId correct_button = ButtonId::L;
    ButtonId human_choice = ButtonId::L;
    DesirabilityPolicy policy = DesirabilityPolicy::Ethical;
    std::uint64_t seed = 0;

    ButtonId incorrect_button() const { return other(correct_button); }
};

struct AgentState {
    AgentId id = AgentId::Human;
    Vec2 position;
    Vec2 velocity_estimate;
    std::optional<ButtonId> goal;
    std::optional<ButtonId> pointing_at;  // always empty for the human
    double speed = 0.15;
    bool halted = false;
    std::optional<ButtonId> pressed;  // button pressed this trial, if any
};

struct WorldState {
    ArenaSpec arena;
    TrialSetup setup;
    AgentState human;
    AgentState assistant;

    const AgentState& agent(AgentId id) const { return id == AgentId::Human ? human : assistant; }
    AgentState& agent(AgentId id) { return id == AgentId::Human ? human : assistant; }
};

struct Press {
    AgentId agent = AgentId::Human;
    ButtonId button = ButtonId::L;
    bool operator==(const Press&) const = default;
};

struct RewardLedger {
    int human = 0;
    int assistant = 0;

    int score(AgentId id) const { return id == AgentId::Human ? human : assistant; }
    bool operator==(const RewardLedger&) const = default;
};

/// Both agents at their start positions; the human heads for her chosen
/// button, the assistant has neither goal nor pointing.
WorldState initial_world(const ArenaSpec& arena, const TrialSetup& setup, double agent_speed = 0.15);

/// First agent (human before assistant) within press_radius of a button that
/// has not pressed yet this trial.
std::optional<Press> detect_press(const WorldState& world);

RewardLedger score_press(const TrialSetup& setup, Press press, RewardLedger ledger);

}  // namespace shellgame
