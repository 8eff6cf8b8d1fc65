#pragma once

// Generate-and-test supervisor for the assistant: every layer tick it lists
// the five alternatives, simulates each one forward, scores the simulated end
// state for the human and for the assistant, folds the two scores according
// to the active policy, and enforces the best alternative when the scores are
// spread widely enough to matter.

#include <array>
#include <optional>
#include <span>

#include "shellgame/behaviour.hpp"
#include "shellgame/geometry.hpp"
#include "shellgame/world.hpp"

namespace shellgame {

/// Logistic desirability q(d) = 1 / (1 + exp(-beta (d - t))).
struct SigmoidParams {
    double beta = 10.0;  // 1/m
    double t = 0.25;     // m
};

struct EnforcementRule {
    double spread_threshold = 0.2;
};

/// Forward-simulation settings used when predicting outcomes.
struct PredictionParams {
    double dt = 1.0 / 30.0;
    int horizon = 600;
    double avoidance_threshold = 0.5;
};

struct LayerRules {
    SigmoidParams sigmoid;
    EnforcementRule enforcement;
    PredictionParams prediction;
};

/// Predicted final positions of both agents.
struct PredictedOutcome {
    Vec2 human_final;
    Vec2 assistant_final;
    bool operator==(const PredictedOutcome&) const = default;
};

struct AlternativeEvaluation {
    BehaviouralAlternative alternative = BehaviouralAlternative::DoNothing;
    PredictedOutcome outcome;
    double q_h = 0.0;
    double q_e = 0.0;
    double q_n = 0.0;
};

/// One record per alternative, in canonical order.
using Evaluation = std::array<AlternativeEvaluation, kAlternativeCount>;

std::array<BehaviouralAlternative, kAlternativeCount> generate_alternatives();

/// The button whose direction from `human_pos` makes the smallest angle with
/// `human_vel`. Ties go to L. Empty when the human is (nearly) stationary.
std::optional<ButtonId> infer_human_goal(Vec2 human_pos, Vec2 human_vel, const ArenaSpec& arena);

/// Forward-simulates one alternative from the current snapshot.
///
/// The human follows the pointed button under Point(b) and her inferred goal
/// otherwise; a human whose goal cannot be inferred is kept in place under
/// every alternative. The assistant walks to b under GoTo(b) and stays put
/// otherwise. If the two straight paths come within the avoidance threshold
/// both agents stop one step before that; otherwise each ends on its goal.
PredictedOutcome predict_outcome(const WorldState& world,
                                 BehaviouralAlternative alternative,
                                 std::optional<ButtonId> inferred_goal,
                                 const PredictionParams& params);

double desirability(Vec2 final_pos, Vec2 incorrect_button_pos, const SigmoidParams& params);

double combine(double q_e, double q_h, DesirabilityPolicy policy);

/// Canonical argmax of q_n if max - min exceeds the spread threshold.
std::optional<BehaviouralAlternative> select_enforcement(std::span<const AlternativeEvaluation> evals,
                                                         const EnforcementRule& rule);
std::optional<BehaviouralAlternative> select_enforcement(
    const std::array<double, kAlternativeCount>& q_n, const EnforcementRule& rule);

/// Generation, prediction, and both desirabilities for every alternative,
/// combined under `policy`.
Evaluation evaluate_alternatives(const WorldState& world, DesirabilityPolicy policy,
                                 const LayerRules& rules);

struct LayerDecision {
    Evaluation evaluation;
    std::optional<BehaviouralAlternative> enforced;

    std::array<double, kAlternativeCount> q_n() const;
};

LayerDecision layer_tick(const WorldState& world, DesirabilityPolicy policy, const LayerRules& rules);

}  // namespace shellgame
