#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace shellgame {

/// Planar position or displacement in meters (velocities reuse it in m/s).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double distance(Vec2 a, Vec2 b) { return (b - a).norm(); }

/// Thrown when a direction is requested from a zero-length vector.
class UndefinedDirection : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Unsigned angle in [0, pi] between two non-zero directions.
double angle_between(Vec2 v1, Vec2 v2);

/// Moves `pos` toward `goal` by `step` meters without overshooting.
Vec2 advance_toward(Vec2 pos, Vec2 goal, double step);

/// Positions sampled every `dt` seconds. points[k] is the position after k steps.
struct Path {
    std::vector<Vec2> points;
    double dt = 0.0;

    std::size_t size() const { return points.size(); }
    /// Positions past the end repeat the final point (the agent has stopped).
    Vec2 at(std::size_t k) const { return k < points.size() ? points[k] : points.back(); }
};

/// Straight-line constant-speed path with horizon + 1 samples. Without a goal
/// the path stays at `pos`.
Path extrapolate(Vec2 pos, std::optional<Vec2> goal, double speed, double dt, int horizon);

struct Conflict {
    std::size_t step = 0;  ///< first step with separation below the threshold
    Vec2 a_stop;           ///< position of the first agent one step earlier
    Vec2 b_stop;
};

/// Earliest step at which the two paths come closer than `threshold`.
/// Stop positions are taken from the preceding step (step 0 reports itself).
std::optional<Conflict> first_conflict(const Path& pa, const Path& pb, double threshold);

}  // namespace shellgame
