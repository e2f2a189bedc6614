#pragma once

/// \file
/// \brief Planar primitives for site generation, the grid and the covering-angle checks.

#include <cstddef>
#include <span>
#include <vector>

namespace kmmtc {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic (x, y) order.
inline bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

double dist(const Point& p, const Point& q);

/// Relative slack applied to every coverage test: d <= r * (1 + kCoverageSlack).
inline constexpr double kCoverageSlack = 1e-9;

inline bool covers(const Point& site, const Point& target, double r) {
  return dist(site, target) <= r * (1.0 + kCoverageSlack);
}

/// Result of intersecting two equal-radius circles.
struct CircleIntersection {
  std::vector<Point> points;  ///< 0, 1 or 2 points, sorted by (x, y)
  bool coincident = false;    ///< centers equal: infinitely many points, none reported
};

/// Intersections of the radius-r circles around c1 and c2. A tangency
/// yields exactly one point.
CircleIntersection circle_circle_intersections(const Point& c1, const Point& c2, double r);

/// Closest point to `from` on the radius-r circle around `center`.
/// When `from == center` every point is equally close; the eastward point
/// (center.x + r, center.y) is returned.
Point nearest_point_on_circle(const Point& center, double r, const Point& from);

/// Indices i with dist(site, targets[i]) <= r (closed, with kCoverageSlack).
std::vector<std::size_t> covered_targets(const Point& site, std::span<const Point> targets,
                                         double r);

/// Distances describing a station p at the origin, a sensor s at (a, 0) and a
/// probe radius r + a_prime around p.
struct LevelProbe {
  double a = 0.0;
  double a_prime = 0.0;
  double delta = 0.0;  // a_prime / 2
  double theta = 0.0;
  double r = 0.0;
};

/// Half-angle theta such that a sensor at distance a from a station covers
/// every direction in [-theta, theta] out to radius r + a_prime (together
/// with the station's own radius-r disk). Law of cosines on the triangle with
/// sides a, r and r + a_prime. Throws std::invalid_argument when a <= 0.
double coverage_angle_halfwidth(double a, double a_prime, double r);

/// Builds a LevelProbe for (a, a_prime, r) with delta and theta filled in.
LevelProbe make_level_probe(double a, double a_prime, double r);

/// Closest feasible placement s' for the two-region configuration with the
/// station at the origin and the outer sensor at (a, 0):
///   x = (delta^2 + 2 r delta + a^2) / (2a) - a/2
///   y = sqrt(((2r + delta)^2 - a^2)(a^2 - delta^2)) / (2a) - sqrt((2r)^2 - a^2) / 2
/// Throws std::invalid_argument when a <= 0.
Point s_prime_location(double a, double r, double delta);

}  // namespace kmmtc
