#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "shellgame/behaviour.hpp"
#include "shellgame/world.hpp"

namespace shellgame {

/// Both robot controllers refuse a step that would bring them closer than
/// `threshold` to the other agent.
struct AvoidanceRule {
    double threshold = 0.5;
};

class InsufficientHistory : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite-difference velocity over the window: (latest - oldest) / ((n-1) dt).
Vec2 estimate_velocity(std::span<const Vec2> history, double dt);

Vec2 avoidance_gate(Vec2 self_pos, Vec2 other_pos, Vec2 proposed_next, const AvoidanceRule& rule);

/// One physics tick of the human proxy: adopt any pointed-at button as the
/// new goal, then walk toward the goal unless the assistant blocks the step.
AgentState human_step(const WorldState& world, double dt, const AvoidanceRule& rule);

/// Applies an enforced alternative (if any) to the assistant and takes one
/// motion step toward its goal. Without enforcement the current action is kept.
AgentState assistant_apply(const WorldState& world,
                           std::optional<BehaviouralAlternative> enforcement,
                           double dt,
                           const AvoidanceRule& rule);

}  // namespace shellgame
