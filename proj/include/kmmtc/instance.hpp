#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmmtc/geometry.hpp"

namespace kmmtc {

/// Thrown for instances that violate the model (r <= 0, no stations, non-finite coordinates).
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Targets T, stations P and sensing radius r.
struct Instance {
  std::vector<Point> targets;
  std::vector<Point> stations;
  double r = 1.0;

  std::size_t n() const { return targets.size(); }
  std::size_t k() const { return stations.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws InvalidInstance on the first violated invariant.
void validate(const Instance& instance);

/// Removes repeated target positions (first occurrence kept). Returns the
/// number of targets removed.
std::size_t dedup_targets(Instance& instance);

}  // namespace kmmtc
