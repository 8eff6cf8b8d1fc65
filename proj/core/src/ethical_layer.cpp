#include "shellgame/ethical_layer.hpp"

#include <algorithm>
#include <cmath>

namespace shellgame {

std::array<BehaviouralAlternative, kAlternativeCount> generate_alternatives() {
    return {BehaviouralAlternative::DoNothing, BehaviouralAlternative::GoToL,
            BehaviouralAlternative::GoToR, BehaviouralAlternative::PointL,
            BehaviouralAlternative::PointR};
}

std::optional<ButtonId> infer_human_goal(Vec2 human_pos, Vec2 human_vel, const ArenaSpec& arena) {
    if (human_vel.norm() < kMinimumSpeed) {
        return std::nullopt;
    }
    std::optional<ButtonId> best;
    double best_angle = 0.0;
    for (ButtonId b : {ButtonId::L, ButtonId::R}) {
        const Vec2 to_button = arena.button(b) - human_pos;
        // Standing on a button: that button is trivially the one she is at.
        const double angle = to_button.norm() > 0.0 ? angle_between(human_vel, to_button) : 0.0;
        if (!best || angle < best_angle) {
            best = b;
            best_angle = angle;
        }
    }
    return best;
}

PredictedOutcome predict_outcome(const WorldState& world,
                                 BehaviouralAlternative alternative,
                                 std::optional<ButtonId> inferred_goal,
                                 const PredictionParams& params) {
    const ArenaSpec& arena = world.arena;

    std::optional<Vec2> human_goal;
    if (inferred_goal) {
        const ButtonId target = point_target(alternative).value_or(*inferred_goal);
        human_goal = arena.button(target);
    }
    std::optional<Vec2> assistant_goal;
    if (auto b = goto_target(alternative)) {
        assistant_goal = arena.button(*b);
    }

    const double human_speed = world.human.velocity_estimate.norm();
    const Path human_path =
        extrapolate(world.human.position, human_goal, human_speed, params.dt, params.horizon);
    const Path assistant_path = extrapolate(world.assistant.position, assistant_goal,
                                            world.assistant.speed, params.dt, params.horizon);

    if (auto c = first_conflict(human_path, assistant_path, params.avoidance_threshold)) {
        return {c->a_stop, c->b_stop};
    }
    return {human_goal.value_or(world.human.position),
            assistant_goal.value_or(world.assistant.position)};
}

double desirability(Vec2 final_pos, Vec2 incorrect_button_pos, const SigmoidParams& params) {
    const double d = distance(final_pos, incorrect_button_pos);
    return 1.0 / (1.0 + std::exp(-params.beta * (d - params.t)));
}

double combine(double q_e, double q_h, DesirabilityPolicy policy) {
    switch (policy) {
        case DesirabilityPolicy::Ethical: return q_h;
        case DesirabilityPolicy::Egoistic: return q_e;
        case DesirabilityPolicy::Aggressive: return -q_h;
    }
    return q_h;
}

std::optional<BehaviouralAlternative> select_enforcement(
    const std::array<double, kAlternativeCount>& q_n, const EnforcementRule& rule) {
    const auto [lo, hi] = std::minmax_element(q_n.begin(), q_n.end());
    if (!(*hi - *lo > rule.spread_threshold)) {
        return std::nullopt;
    }
    // max_element returns the first maximum, i.e. canonical order breaks ties.
    const auto best = std::max_element(q_n.begin(), q_n.end());
    return static_cast<BehaviouralAlternative>(best - q_n.begin());
}

std::optional<BehaviouralAlternative> select_enforcement(std::span<const AlternativeEvaluation> evals,
                                                         const EnforcementRule& rule) {
    if (evals.size() != kAlternativeCount) {
        throw std::invalid_argument("select_enforcement: expected one record per alternative");
    }
    std::array<double, kAlternativeCount> q{};
    for (const auto& e : evals) {
        q[index_of(e.alternative)] = e.q_n;
    }
    return select_enforcement(q, rule);
}

Evaluation evaluate_alternatives(const WorldState& world, DesirabilityPolicy policy,
                                 const LayerRules& rules) {
    const auto goal = infer_human_goal(world.human.position, world.human.velocity_estimate, world.arena);
    const Vec2 incorrect = world.arena.button(world.setup.incorrect_button());

    Evaluation out;
    const auto alternatives = generate_alternatives();
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
        AlternativeEvaluation& e = out[i];
        e.alternative = alternatives[i];
        e.outcome = predict_outcome(world, e.alternative, goal, rules.prediction);
        e.q_h = desirability(e.outcome.human_final, incorrect, rules.sigmoid);
        e.q_e = desirability(e.outcome.assistant_final, incorrect, rules.sigmoid);
        e.q_n = combine(e.q_e, e.q_h, policy);
    }
    return out;
}

std::array<double, kAlternativeCount> LayerDecision::q_n() const {
    std::array<double, kAlternativeCount> q{};
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = evaluation[i].q_n;
    return q;
}

LayerDecision layer_tick(const WorldState& world, DesirabilityPolicy policy, const LayerRules& rules) {
    LayerDecision d;
    d.evaluation = evaluate_alternatives(world, policy, rules);
    d.enforced = select_enforcement(std::span<const AlternativeEvaluation>(d.evaluation), rules.enforcement);
    return d;
}

}  // namespace shellgame
