#include "shellgame/world.hpp"

#include <string>

namespace shellgame {

bool ArenaSpec::contains(Vec2 p) const {
    return p.finite() && std::abs(p.x) <= width / 2.0 && std::abs(p.y) <= height / 2.0;
}

void ArenaSpec::validate() const {
    if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
        throw ConfigError("arena: width and height must be positive");
    }
    if (!(press_radius > 0.0)) {
        throw ConfigError("arena: press_radius must be positive");
    }
    for (auto [name, p] : {std::pair{"button L", button(ButtonId::L)},
                           std::pair{"button R", button(ButtonId::R)},
                           std::pair{"human_start", human_start},
                           std::pair{"assistant_start", assistant_start}}) {
        if (!contains(p)) {
            throw ConfigError(std::string("arena: ") + name + " lies outside the arena");
        }
    }
    if (!(distance(button(ButtonId::L), button(ButtonId::R)) > 2.0 * press_radius)) {
        throw ConfigError("arena: buttons must be separated by more than 2*press_radius");
    }
}

WorldState initial_world(const ArenaSpec& arena, const TrialSetup& setup, double agent_speed) {
    arena.validate();
    if (!(agent_speed >= 0.0)) {
        throw ConfigError("agent speed must be non-negative");
    }
    WorldState w;
    w.arena = arena;
    w.setup = setup;
    w.human.id = AgentId::Human;
    w.human.position = arena.human_start;
    w.human.goal = setup.human_choice;
    w.human.speed = agent_speed;
    w.assistant.id = AgentId::Assistant;
    w.assistant.position = arena.assistant_start;
    w.assistant.speed = agent_speed;
    return w;
}

std::optional<Press> detect_press(const WorldState& world) {
    for (AgentId id : {AgentId::Human, AgentId::Assistant}) {
        const AgentState& a = world.agent(id);
        if (a.pressed) continue;
        for (ButtonId b : {ButtonId::L, ButtonId::R}) {
            if (distance(a.position, world.arena.button(b)) <= world.arena.press_radius) {
                return Press{id, b};
            }
        }
    }
    return std::nullopt;
}

RewardLedger score_press(const TrialSetup& setup, Press press, RewardLedger ledger) {
    const int delta = press.button == setup.correct_button ? 1 : -1;
    if (press.agent == AgentId::Human) {
        ledger.human += delta;
    } else {
        ledger.assistant += delta;
    }
    return ledger;
}

}  // namespace shellgame
