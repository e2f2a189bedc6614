#include "kmmtc/instance.hpp"

#include <algorithm>
#include <cmath>

namespace kmmtc {

namespace {

bool finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

void validate(const Instance& instance) {
  if (!std::isfinite(instance.r) || !(instance.r > 0.0)) {
    throw InvalidInstance("r must be a positive finite number");
  }
  if (instance.stations.empty()) throw InvalidInstance("at least one station is required");
  for (std::size_t i = 0; i < instance.targets.size(); ++i) {
    if (!finite(instance.targets[i])) {
      throw InvalidInstance("target " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  for (std::size_t i = 0; i < instance.stations.size(); ++i) {
    if (!finite(instance.stations[i])) {
      throw InvalidInstance("station " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
}

std::size_t dedup_targets(Instance& instance) {
  std::vector<Point> kept;
  kept.reserve(instance.targets.size());
  for (const auto& t : instance.targets) {
    if (std::find(kept.begin(), kept.end(), t) == kept.end()) kept.push_back(t);
  }
  const auto removed = instance.targets.size() - kept.size();
  instance.targets = std::move(kept);
  return removed;
}

}  // namespace kmmtc
