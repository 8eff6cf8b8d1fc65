#include "shellgame/behaviour.hpp"

namespace shellgame {

std::string_view to_string(ButtonId b) { return b == ButtonId::L ? "L" : "R"; }

std::optional<ButtonId> parse_button(std::string_view s) {
    if (s == "L") return ButtonId::L;
    if (s == "R") return ButtonId::R;
    return std::nullopt;
}

namespace {
constexpr std::array<std::string_view, kAlternativeCount> kAlternativeNames{
    "DoNothing", "GoTo(L)", "GoTo(R)", "Point(L)", "Point(R)"};
}

std::string_view to_string(BehaviouralAlternative a) { return kAlternativeNames[index_of(a)]; }

std::optional<BehaviouralAlternative> parse_alternative(std::string_view s) {
    for (std::size_t i = 0; i < kAlternativeNames.size(); ++i) {
        if (kAlternativeNames[i] == s) return static_cast<BehaviouralAlternative>(i);
    }
    return std::nullopt;
}

std::string_view to_string(DesirabilityPolicy p) {
    switch (p) {
        case DesirabilityPolicy::Ethical: return "ethical";
        case DesirabilityPolicy::Egoistic: return "egoistic";
        case DesirabilityPolicy::Aggressive: return "aggressive";
    }
    return "?";
}

std::optional<DesirabilityPolicy> parse_policy(std::string_view s) {
    if (s == "ethical") return DesirabilityPolicy::Ethical;
    if (s == "egoistic" || s == "competitive") return DesirabilityPolicy::Egoistic;
    if (s == "aggressive") return DesirabilityPolicy::Aggressive;
    return std::nullopt;
}

}  // namespace shellgame
