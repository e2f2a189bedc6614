#pragma once

/// \file
/// \brief Shifting-grid approximation scheme.
///
/// Round f solves every cell of the grid shifted by (2fr, 2fr) exactly and
/// takes the union of the cell covers; the cheapest of the m rounds costs at
/// most (1 + 4/m) times the optimum over the candidate-site universe.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmmtc/instance.hpp"
#include "kmmtc/sites.hpp"
#include "kmmtc/strip_dp.hpp"

namespace kmmtc {

enum class CapPolicy { Auto, Fixed, Verify };

struct PtasConfig {
  std::optional<double> epsilon;
  std::optional<int> m;
  CapPolicy cap_policy = CapPolicy::Auto;
  int fixed_cap = 0;  ///< used with CapPolicy::Fixed
  std::uint64_t seed = 0;  ///< recorded only; the solver has no random steps
  int jobs = 1;
  DpMode dp_mode = DpMode::Keyed;

  /// m, either given or ceil(4 / epsilon). Throws std::invalid_argument unless
  /// exactly one of epsilon and m is set and the result is at least 1.
  int resolved_m() const;
};

/// Thrown when some cell stays infeasible under the cap policy.
class Infeasible : public std::runtime_error {
 public:
  Infeasible(const std::string& what, int round, int strip)
      : std::runtime_error(what), round(round), strip(strip) {}
  int round;
  int strip;
};

struct Placement {
  Point position;
  std::size_t station = 0;
  double weight = 0.0;
};

struct Solution {
  std::vector<Placement> placements;
  std::vector<std::size_t> site_indices;  ///< into the site list that was solved
  double total_cost = 0.0;
  int shift_round_used = 0;
  std::vector<double> per_round_costs;      ///< weight of each round's site set
  std::vector<double> per_round_cell_sums;  ///< sum of per-cell costs, before dedup
  int m = 1;
  std::optional<double> epsilon;
  CapPolicy cap_policy = CapPolicy::Auto;
  int cap = 0;  ///< largest per-strip cap used
  std::uint64_t seed = 0;
  DpCounters counters;
  std::size_t cells_solved = 0;
  std::size_t cap_mismatches = 0;  ///< verify mode: cells where cost(L) != cost(L+1)
};

/// Full pipeline: candidate sites, dominance pruning, then the shifted rounds.
Solution solve(const Instance& instance, const PtasConfig& config);

/// Shifted rounds over a prepared site list (normally pruned candidate sites).
Solution solve(const Instance& instance, std::span<const CandidateSite> sites,
               const PtasConfig& config);

/// Pruned candidate sites of `instance`.
std::vector<CandidateSite> prepare_sites(const Instance& instance);

/// Targets not covered by any of `positions`.
std::vector<std::size_t> uncovered_targets(const Instance& instance,
                                           std::span<const Point> positions);

struct ShiftAudit {
  double average = 0.0;
  double minimum = 0.0;
  double bound = 0.0;   ///< (1 + 4/m) * opt
  double margin = 0.0;  ///< bound - average
  bool passed = false;
};

/// Checks mean(per_round_costs) <= (1 + 4/m) opt and min <= mean, with m the
/// number of rounds and a 1e-9 relative tolerance.
ShiftAudit shift_average_audit(std::span<const double> per_round_costs, double opt);

const char* to_string(CapPolicy policy);

}  // namespace kmmtc
