#pragma once

/// \file
/// \brief Desk-scale ground truth: exact weighted cover, greedy baseline,
/// fine-grid discretization audit and sensor censuses.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kmmtc/instance.hpp"
#include "kmmtc/sites.hpp"

namespace kmmtc {

struct OracleResult {
  bool feasible = true;
  std::size_t uncoverable_target = 0;  ///< meaningful only when !feasible
  double cost = 0.0;
  std::vector<std::size_t> site_indices;  ///< ascending
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
};

struct ExactOptions {
  /// Cardinality limit on the cover; unlimited when empty.
  std::optional<std::size_t> max_sites;
  /// Node budget; the result is not proven optimal when it runs out.
  std::uint64_t max_nodes = 50'000'000;
};

/// Minimum-weight cover of targets 0..target_count-1 by branch and bound.
/// Branches on the lowest-index uncovered target over the sites covering it,
/// cheapest first. Bound: current cost plus, over uncovered targets, the
/// largest cheapest-covering-site weight.
OracleResult exact_min_cost_cover(std::size_t target_count, std::span<const CandidateSite> sites,
                                  const ExactOptions& options = {});

/// Repeatedly takes the site with the least weight per newly covered target.
OracleResult greedy_cover(std::size_t target_count, std::span<const CandidateSite> sites);

struct GapReport {
  double step = 0.0;
  double discrete_opt = 0.0;
  double grid_opt = 0.0;
  double gap = 0.0;  ///< grid_opt - discrete_opt
  std::size_t grid_points = 0;
  std::size_t grid_sites = 0;           ///< distinct covered sets seen on the grid
  std::size_t grid_solution_size = 0;
};

/// Optimum over sensor positions restricted to a lattice of pitch `step`
/// (points within r of some target, exact closed disks), compared against
/// `discrete_opt`.
GapReport grid_refine_audit(const Instance& instance, double discrete_opt, double step);

struct CensusReport {
  std::size_t max_per_strip = 0;
  std::size_t max_per_square = 0;
  double square_side = 0.0;  ///< world units: sqrt(1/2) * r
};

/// Counts placements per width-2r strip of the shifted grid (m, f) and per
/// square of side sqrt(1/2) in r-normalized units.
CensusReport strip_sensor_census(const Instance& instance, std::span<const Point> placements,
                                 int m, int f = 0);

}  // namespace kmmtc
