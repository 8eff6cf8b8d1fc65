#include "shellgame/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace shellgame {

double angle_between(Vec2 v1, Vec2 v2) {
    const double n1 = v1.norm();
    const double n2 = v2.norm();
    if (!(n1 > 0.0) || !(n2 > 0.0)) {
        throw UndefinedDirection("angle_between: zero-length direction");
    }
    const double c = std::clamp(dot(v1, v2) / (n1 * n2), -1.0, 1.0);
    return std::acos(c);
}

Vec2 advance_toward(Vec2 pos, Vec2 goal, double step) {
    if (step < 0.0) {
        throw std::invalid_argument("advance_toward: negative step");
    }
    const Vec2 delta = goal - pos;
    const double d = delta.norm();
    if (d <= step) {
        return goal;
    }
    return pos + delta * (step / d);
}

Path extrapolate(Vec2 pos, std::optional<Vec2> goal, double speed, double dt, int horizon) {
    if (speed < 0.0 || !(dt > 0.0) || horizon < 1) {
        throw std::invalid_argument("extrapolate: requires speed >= 0, dt > 0, horizon >= 1");
    }
    Path path;
    path.dt = dt;
    path.points.reserve(static_cast<std::size_t>(horizon) + 1);
    path.points.push_back(pos);
    const double step = speed * dt;
    Vec2 p = pos;
    for (int k = 0; k < horizon; ++k) {
        if (goal) {
            p = advance_toward(p, *goal, step);
        }
        path.points.push_back(p);
    }
    return path;
}

std::optional<Conflict> first_conflict(const Path& pa, const Path& pb, double threshold) {
    if (pa.points.empty() || pb.points.empty()) {
        return std::nullopt;
    }
    if (pa.dt != pb.dt) {
        throw std::invalid_argument("first_conflict: paths must share dt");
    }
    const std::size_t n = std::max(pa.size(), pb.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (distance(pa.at(k), pb.at(k)) < threshold) {
            const std::size_t stop = k == 0 ? 0 : k - 1;
            return Conflict{k, pa.at(stop), pb.at(stop)};
        }
    }
    return std::nullopt;
}

}  // namespace shellgame
