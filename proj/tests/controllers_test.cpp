#include <gtest/gtest.h>

#include <vector>

#include "shellgame/controllers.hpp"

namespace shellgame {
namespace {

constexpr double kDt = 1.0 / 30.0;

TEST(EstimateVelocity, StationaryIsZero) {
    const std::vector<Vec2> h(5, Vec2{0.2, 0.3});
    EXPECT_EQ(estimate_velocity(h, kDt), (Vec2{0, 0}));
}

TEST(EstimateVelocity, ConstantSpeedRecovered) {
    std::vector<Vec2> h;
    for (int i = 0; i < 5; ++i) h.push_back({0.005 * i, 0.0});
    const Vec2 v = estimate_velocity(h, kDt);
    EXPECT_NEAR(v.x, 0.15, 1e-12);
    EXPECT_NEAR(v.y, 0.0, 1e-12);
}

TEST(EstimateVelocity, TooShortHistory) {
    const std::vector<Vec2> one{{0, 0}};
    EXPECT_THROW(estimate_velocity(one, kDt), InsufficientHistory);
    EXPECT_THROW(estimate_velocity(std::vector<Vec2>{}, kDt), InsufficientHistory);
}

TEST(EstimateVelocity, SlowDriftReportsZero) {
    std::vector<Vec2> h;
    for (int i = 0; i < 5; ++i) h.push_back({0.0003 * i, 0.0});  // 0.009 m/s
    EXPECT_EQ(estimate_velocity(h, kDt), (Vec2{0, 0}));
}

TEST(EstimateVelocity, SingleTickJitterStaysWithinBound) {
    // Enumerate every single-sample displacement of up to 1 mm per axis.
    const std::vector<double> offsets{-0.001, 0.0, 0.001};
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        for (double jx : offsets)
            for (double jy : offsets) {
                std::vector<Vec2> h;
                for (int k = 0; k < 5; ++k) h.push_back({0.005 * k, 0.0});
                h[i] = h[i] + Vec2{jx, jy};
                const double err = std::abs(estimate_velocity(h, kDt).norm() - 0.15);
                worst = std::max(worst, err);
                EXPECT_LE(err, 0.012) << "sample " << i << " jitter " << jx << "," << jy;
            }
    // Worst case: an endpoint displaced 1 mm on both axes, i.e. 0.0075 m/s per
    // axis over the 4-tick baseline.
    EXPECT_NEAR(worst, std::hypot(0.15 + 0.0075, 0.0075) - 0.15, 1e-9);
}

TEST(AvoidanceGate, Cases) {
    const AvoidanceRule rule;
    EXPECT_EQ(avoidance_gate({0, 0}, {2, 0}, {0.1, 0}, rule), (Vec2{0.1, 0}));
    EXPECT_EQ(avoidance_gate({0, 0}, {0.6, 0}, {0.11, 0}, rule), (Vec2{0, 0}));
    EXPECT_EQ(avoidance_gate({0, 0}, {0.75, 0}, {0.25, 0}, rule), (Vec2{0.25, 0}));
}

WorldState world_with(ButtonId correct, ButtonId choice) {
    TrialSetup s;
    s.correct_button = correct;
    s.human_choice = choice;
    return initial_world(ArenaSpec{}, s);
}

TEST(HumanStep, WalksStraightTowardGoal) {
    const WorldState w = world_with(ButtonId::L, ButtonId::L);
    const AgentState h = human_step(w, kDt, {});
    const Vec2 expected = advance_toward(w.human.position, w.arena.button(ButtonId::L), 0.005);
    EXPECT_EQ(h.position, expected);
    EXPECT_EQ(h.goal, ButtonId::L);
    EXPECT_FALSE(h.halted);
}

TEST(HumanStep, AdoptsPointedButton) {
    WorldState w = world_with(ButtonId::R, ButtonId::L);
    w.assistant.pointing_at = ButtonId::R;
    const AgentState h = human_step(w, kDt, {});
    EXPECT_EQ(h.goal, ButtonId::R);
    EXPECT_LT(distance(h.position, w.arena.button(ButtonId::R)),
              distance(w.human.position, w.arena.button(ButtonId::R)));
    EXPECT_FALSE(h.pointing_at.has_value());
}

TEST(HumanStep, PointingAtCurrentGoalIsIdempotent) {
    WorldState w = world_with(ButtonId::L, ButtonId::L);
    const AgentState plain = human_step(w, kDt, {});
    w.assistant.pointing_at = ButtonId::L;
    const AgentState pointed = human_step(w, kDt, {});
    EXPECT_EQ(plain.goal, pointed.goal);
    EXPECT_EQ(plain.position, pointed.position);
}

TEST(HumanStep, HaltsWhenAssistantBlocksThePath) {
    WorldState w = world_with(ButtonId::L, ButtonId::L);
    const Vec2 dir = (w.arena.button(ButtonId::L) - w.human.position) /
                     distance(w.human.position, w.arena.button(ButtonId::L));
    w.assistant.position = w.human.position + dir * 0.45;
    const AgentState h = human_step(w, kDt, {});
    EXPECT_EQ(h.position, w.human.position);
    EXPECT_TRUE(h.halted);
}

TEST(HumanStep, GoalPersistsAfterPointingStops) {
    WorldState w = world_with(ButtonId::R, ButtonId::L);
    w.assistant.pointing_at = ButtonId::R;
    w.human = human_step(w, kDt, {});
    w.assistant.pointing_at.reset();
    for (int i = 0; i < 20; ++i) {
        w.human = human_step(w, kDt, {});
        EXPECT_EQ(w.human.goal, ButtonId::R);
    }
}

TEST(AssistantApply, PointKeepsAssistantInPlace) {
    const WorldState w = world_with(ButtonId::L, ButtonId::R);
    const AgentState a = assistant_apply(w, BehaviouralAlternative::PointL, kDt, {});
    EXPECT_EQ(a.position, w.assistant.position);
    EXPECT_EQ(a.pointing_at, ButtonId::L);
    EXPECT_FALSE(a.goal.has_value());
}

TEST(AssistantApply, GoToAdvances) {
    const WorldState w = world_with(ButtonId::L, ButtonId::R);
    const AgentState a = assistant_apply(w, BehaviouralAlternative::GoToR, kDt, {});
    EXPECT_EQ(a.goal, ButtonId::R);
    EXPECT_FALSE(a.pointing_at.has_value());
    EXPECT_NEAR(distance(a.position, w.assistant.position), 0.005, 1e-12);
}

TEST(AssistantApply, DoNothingClearsAction) {
    WorldState w = world_with(ButtonId::L, ButtonId::R);
    w.assistant.pointing_at = ButtonId::R;
    const AgentState a = assistant_apply(w, BehaviouralAlternative::DoNothing, kDt, {});
    EXPECT_FALSE(a.pointing_at.has_value());
    EXPECT_FALSE(a.goal.has_value());
    EXPECT_EQ(a.position, w.assistant.position);
}

TEST(AssistantApply, WithoutEnforcementKeepsCurrentAction) {
    // Two ticks by hand: GoTo(R) enforced, then nothing enforced.
    WorldState w = world_with(ButtonId::L, ButtonId::R);
    w.assistant = assistant_apply(w, BehaviouralAlternative::GoToR, kDt, {});
    const Vec2 after_first = w.assistant.position;
    w.assistant = assistant_apply(w, std::nullopt, kDt, {});
    EXPECT_EQ(w.assistant.goal, ButtonId::R);
    const Vec2 r = w.arena.button(ButtonId::R);
    EXPECT_NEAR(distance(w.assistant.position, r), distance(ArenaSpec{}.assistant_start, r) - 0.010, 1e-12);
    EXPECT_NEAR(distance(after_first, w.assistant.position), 0.005, 1e-12);
}

TEST(AssistantApply, GatedByHuman) {
    WorldState w = world_with(ButtonId::L, ButtonId::R);
    w.human.position = {0.0, 0.4};  // 0.5 m below the assistant
    w.assistant.position = {0.0, 0.9};
    w.arena.buttons[0] = {0.0, -1.0};
    const AgentState a = assistant_apply(w, BehaviouralAlternative::GoToL, kDt, {});
    EXPECT_EQ(a.position, w.assistant.position);
    EXPECT_TRUE(a.halted);
}

}  // namespace
}  // namespace shellgame
