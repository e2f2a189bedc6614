#include "kmmtc/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

#include "kmmtc/grid.hpp"

namespace kmmtc {

int PtasConfig::resolved_m() const {
  if (epsilon.has_value() == m.has_value()) {
    throw std::invalid_argument("exactly one of epsilon and m must be given");
  }
  if (m) {
    if (*m < 1) throw std::invalid_argument("m must be at least 1");
    return *m;
  }
  if (!(*epsilon > 0.0) || !std::isfinite(*epsilon)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  return static_cast<int>(std::ceil(4.0 / *epsilon));
}

const char* to_string(CapPolicy policy) {
  switch (policy) {
    case CapPolicy::Auto: return "auto";
    case CapPolicy::Fixed: return "fixed";
    case CapPolicy::Verify: return "verify";
  }
  return "auto";
}

std::vector<CandidateSite> prepare_sites(const Instance& instance) {
  return prune_dominated(generate_candidate_sites(instance));
}

std::vector<std::size_t> uncovered_targets(const Instance& instance,
                                           std::span<const Point> positions) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < instance.targets.size(); ++t) {
    const bool hit = std::any_of(positions.begin(), positions.end(), [&](const Point& p) {
      return covers(p, instance.targets[t], instance.r);
    });
    if (!hit) out.push_back(t);
  }
  return out;
}

namespace {

struct RoundResult {
  std::set<std::size_t> sites;
  double cost = 0.0;
  double cell_sum = 0.0;
  DpCounters counters;
  std::size_t cells = 0;
  int max_cap = 0;
  std::size_t mismatches = 0;
};

std::size_t largest_pool(const CellSolution& solution) {
  return solution.pool_sizes.empty()
             ? 0
             : *std::max_element(solution.pool_sizes.begin(), solution.pool_sizes.end());
}

RoundResult solve_round(const Instance& instance, std::span<const CandidateSite> sites,
                        const Grid& grid, const PtasConfig& config, int f) {
  RoundResult round;
  DpOptions options;
  options.mode = config.dp_mode;
  const int default_cap =
      config.cap_policy == CapPolicy::Fixed ? config.fixed_cap : auto_cap(grid.m, instance.k());
  for (const auto& cell : decompose(grid, instance.targets, sites, f)) {
    options.cap = default_cap;
    int cap_used = default_cap;
    auto solution = solve_cell(cell, sites, options);
    round.counters += solution.counters;
    if (config.cap_policy == CapPolicy::Verify && solution.feasible) {
      options.cap = default_cap + 1;
      auto above = solve_cell(cell, sites, options);
      round.counters += above.counters;
      const double scale = std::max(1.0, solution.cost);
      if (std::abs(above.cost - solution.cost) > 1e-9 * scale) {
        ++round.mismatches;
        if (above.cost < solution.cost) {
          solution = std::move(above);
          cap_used = default_cap + 1;
        }
      }
      options.cap = cap_used;
    }
    if (!solution.feasible && config.cap_policy != CapPolicy::Fixed) {
      // A cap of max |R_i| never binds.
      options.cap = static_cast<int>(std::max<std::size_t>(largest_pool(solution), 1));
      if (options.cap > default_cap) {
        solution = solve_cell(cell, sites, options);
        round.counters += solution.counters;
      }
    }
    if (!solution.feasible) {
      throw Infeasible("cell (" + std::to_string(cell.i) + "," + std::to_string(cell.j) +
                           ") of round " + std::to_string(f) + " is infeasible at strip " +
                           std::to_string(solution.infeasible_strip) + " with cap " +
                           std::to_string(options.cap),
                       f, solution.infeasible_strip);
    }
    round.max_cap = std::max(round.max_cap, options.cap);
    round.cell_sum += solution.cost;
    round.sites.insert(solution.site_indices.begin(), solution.site_indices.end());
    ++round.cells;
  }
  for (auto s : round.sites) round.cost += sites[s].weight;
  return round;
}

}  // namespace

Solution solve(const Instance& instance, const PtasConfig& config) {
  validate(instance);
  const auto sites = prepare_sites(instance);
  return solve(instance, sites, config);
}

Solution solve(const Instance& instance, std::span<const CandidateSite> sites,
               const PtasConfig& config) {
  validate(instance);
  if (config.cap_policy == CapPolicy::Fixed && config.fixed_cap < 1) {
    throw std::invalid_argument("fixed cap must be at least 1");
  }
  const int m = config.resolved_m();
  const Grid grid = bounding_box(instance, m);

  std::vector<RoundResult> rounds(static_cast<std::size_t>(m));
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (int f = 0; f < m; ++f) rounds[f] = solve_round(instance, sites, grid, config, f);
  } else {
    for (int first = 0; first < m; first += jobs) {
      std::vector<std::future<RoundResult>> pending;
      for (int f = first; f < std::min(m, first + jobs); ++f) {
        pending.push_back(std::async(std::launch::async, [&, f] {
          return solve_round(instance, sites, grid, config, f);
        }));
      }
      for (int f = first; f < std::min(m, first + jobs); ++f) rounds[f] = pending[f - first].get();
    }
  }

  Solution solution;
  solution.m = m;
  solution.epsilon = config.epsilon;
  solution.cap_policy = config.cap_policy;
  solution.seed = config.seed;
  int winner = 0;
  for (int f = 0; f < m; ++f) {
    solution.per_round_costs.push_back(rounds[f].cost);
    solution.per_round_cell_sums.push_back(rounds[f].cell_sum);
    solution.counters += rounds[f].counters;
    solution.cells_solved += rounds[f].cells;
    solution.cap = std::max(solution.cap, rounds[f].max_cap);
    solution.cap_mismatches += rounds[f].mismatches;
    if (rounds[f].cost < rounds[winner].cost) winner = f;
  }
  solution.shift_round_used = winner;
  solution.total_cost = rounds[winner].cost;
  for (auto s : rounds[winner].sites) {
    solution.site_indices.push_back(s);
    solution.placements.push_back({sites[s].position, sites[s].origin_station, sites[s].weight});
  }
  return solution;
}

ShiftAudit shift_average_audit(std::span<const double> per_round_costs, double opt) {
  ShiftAudit audit;
  if (per_round_costs.empty()) return audit;
  const auto m = static_cast<double>(per_round_costs.size());
  double sum = 0.0;
  for (double c : per_round_costs) sum += c;
  audit.average = sum / m;
  audit.minimum = *std::min_element(per_round_costs.begin(), per_round_costs.end());
  audit.bound = (1.0 + 4.0 / m) * opt;
  audit.margin = audit.bound - audit.average;
  const double tol = 1e-9 * std::max(1.0, audit.bound);
  audit.passed = audit.average <= audit.bound + tol && audit.minimum <= audit.average + tol;
  return audit;
}

}  // namespace kmmtc
