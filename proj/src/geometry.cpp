#include "kmmtc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kmmtc {

double dist(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

CircleIntersection circle_circle_intersections(const Point& c1, const Point& c2, double r) {
  CircleIntersection out;
  if (!(r > 0.0)) throw std::invalid_argument("circle_circle_intersections: r must be positive");
  if (c1 == c2) {
    out.coincident = true;
    return out;
  }
  const double d = dist(c1, c2);
  const double reach = 2.0 * r;
  if (d > reach * (1.0 + kCoverageSlack)) return out;

  const Point mid{(c1.x + c2.x) / 2.0, (c1.y + c2.y) / 2.0};
  // Tangent (up to slack): report the single touching point.
  const double h2 = r * r - (d / 2.0) * (d / 2.0);
  if (h2 <= 0.0 || std::abs(d - reach) <= reach * 1e-15) {
    out.points.push_back(mid);
    return out;
  }
  const double h = std::sqrt(h2);
  const double ux = (c2.x - c1.x) / d;
  const double uy = (c2.y - c1.y) / d;
  Point a{mid.x - h * uy, mid.y + h * ux};
  Point b{mid.x + h * uy, mid.y - h * ux};
  if (lex_less(b, a)) std::swap(a, b);
  out.points = {a, b};
  return out;
}

Point nearest_point_on_circle(const Point& center, double r, const Point& from) {
  if (!(r > 0.0)) throw std::invalid_argument("nearest_point_on_circle: r must be positive");
  const double d = dist(center, from);
  if (d == 0.0) return {center.x + r, center.y};
  return {center.x + r * (from.x - center.x) / d, center.y + r * (from.y - center.y) / d};
}

std::vector<std::size_t> covered_targets(const Point& site, std::span<const Point> targets,
                                         double r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (covers(site, targets[i], r)) out.push_back(i);
  }
  return out;
}

double coverage_angle_halfwidth(double a, double a_prime, double r) {
  if (!(a > 0.0)) throw std::invalid_argument("coverage_angle_halfwidth: a must be positive");
  const double outer = r + a_prime;
  const double c = (outer * outer + a * a - r * r) / (2.0 * a * outer);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

LevelProbe make_level_probe(double a, double a_prime, double r) {
  return {a, a_prime, a_prime / 2.0, coverage_angle_halfwidth(a, a_prime, r), r};
}

Point s_prime_location(double a, double r, double delta) {
  if (!(a > 0.0)) throw std::invalid_argument("s_prime_location: a must be positive");
  const double x = (delta * delta + 2.0 * r * delta + a * a) / (2.0 * a) - a / 2.0;
  const double upper = ((2.0 * r + delta) * (2.0 * r + delta) - a * a) * (a * a - delta * delta);
  const double y = std::sqrt(std::max(upper, 0.0)) / (2.0 * a) -
                   std::sqrt(std::max(4.0 * r * r - a * a, 0.0)) / 2.0;
  return {x, y};
}

}  // namespace kmmtc
