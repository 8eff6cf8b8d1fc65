#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace shellgame {

enum class ButtonId : std::uint8_t { L = 0, R = 1 };

constexpr ButtonId other(ButtonId b) { return b == ButtonId::L ? ButtonId::R : ButtonId::L; }
std::string_view to_string(ButtonId b);
std::optional<ButtonId> parse_button(std::string_view s);

/// The five alternatives the layer may enforce, in canonical order a1..a5.
enum class BehaviouralAlternative : std::uint8_t {
    DoNothing = 0,
    GoToL = 1,
    GoToR = 2,
    PointL = 3,
    PointR = 4,
};

inline constexpr std::size_t kAlternativeCount = 5;

constexpr std::size_t index_of(BehaviouralAlternative a) { return static_cast<std::size_t>(a); }

constexpr std::optional<ButtonId> goto_target(BehaviouralAlternative a) {
    switch (a) {
        case BehaviouralAlternative::GoToL: return ButtonId::L;
        case BehaviouralAlternative::GoToR: return ButtonId::R;
        default: return std::nullopt;
    }
}

constexpr std::optional<ButtonId> point_target(BehaviouralAlternative a) {
    switch (a) {
        case BehaviouralAlternative::PointL: return ButtonId::L;
        case BehaviouralAlternative::PointR: return ButtonId::R;
        default: return std::nullopt;
    }
}

constexpr BehaviouralAlternative go_to(ButtonId b) {
    return b == ButtonId::L ? BehaviouralAlternative::GoToL : BehaviouralAlternative::GoToR;
}
constexpr BehaviouralAlternative point_at(ButtonId b) {
    return b == ButtonId::L ? BehaviouralAlternative::PointL : BehaviouralAlternative::PointR;
}

/// "DoNothing", "GoTo(L)", ... as written to traces.
std::string_view to_string(BehaviouralAlternative a);
std::optional<BehaviouralAlternative> parse_alternative(std::string_view s);

/// How the assistant folds the two desirabilities into one score.
enum class DesirabilityPolicy : std::uint8_t { Ethical, Egoistic, Aggressive };

inline constexpr std::array<DesirabilityPolicy, 3> kAllPolicies{
    DesirabilityPolicy::Ethical, DesirabilityPolicy::Egoistic, DesirabilityPolicy::Aggressive};

std::string_view to_string(DesirabilityPolicy p);
/// Accepts ethical, egoistic, aggressive, and "competitive" as an alias for egoistic.
std::optional<DesirabilityPolicy> parse_policy(std::string_view s);

}  // namespace shellgame
