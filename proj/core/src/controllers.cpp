#include "shellgame/controllers.hpp"

namespace shellgame {

Vec2 estimate_velocity(std::span<const Vec2> history, double dt) {
    if (history.size() < 2) {
        throw InsufficientHistory("estimate_velocity: need at least 2 samples");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("estimate_velocity: dt must be positive");
    }
    const double span = static_cast<double>(history.size() - 1) * dt;
    const Vec2 v = (history.back() - history.front()) / span;
    if (v.norm() < kMinimumSpeed) {
        return {};
    }
    return v;
}

Vec2 avoidance_gate(Vec2 self_pos, Vec2 other_pos, Vec2 proposed_next, const AvoidanceRule& rule) {
    return distance(proposed_next, other_pos) >= rule.threshold ? proposed_next : self_pos;
}

namespace {

// Moves `self` one step toward its goal, gated against `other`.
void walk(AgentState& self, const AgentState& other, const ArenaSpec& arena, double dt,
          const AvoidanceRule& rule) {
    if (!self.goal) {
        self.halted = false;
        return;
    }
    const Vec2 proposed = advance_toward(self.position, arena.button(*self.goal), self.speed * dt);
    const Vec2 next = avoidance_gate(self.position, other.position, proposed, rule);
    self.halted = proposed != self.position && next == self.position;
    self.position = next;
}

}  // namespace

AgentState human_step(const WorldState& world, double dt, const AvoidanceRule& rule) {
    AgentState human = world.human;
    human.pointing_at.reset();
    if (world.assistant.pointing_at) {
        human.goal = world.assistant.pointing_at;
    }
    walk(human, world.assistant, world.arena, dt, rule);
    return human;
}

AgentState assistant_apply(const WorldState& world,
                           std::optional<BehaviouralAlternative> enforcement,
                           double dt,
                           const AvoidanceRule& rule) {
    AgentState assistant = world.assistant;
    if (enforcement) {
        if (auto b = goto_target(*enforcement)) {
            assistant.goal = b;
            assistant.pointing_at.reset();
        } else if (auto p = point_target(*enforcement)) {
            assistant.pointing_at = p;
            assistant.goal.reset();
        } else {
            assistant.goal.reset();
            assistant.pointing_at.reset();
        }
    }
    walk(assistant, world.human, world.arena, dt, rule);
    return assistant;
}

}  // namespace shellgame
