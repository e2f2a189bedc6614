#include "kmmtc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "kmmtc/grid.hpp"

namespace kmmtc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class BranchAndBound {
 public:
  BranchAndBound(std::size_t target_count, std::span<const CandidateSite> sites,
                 const ExactOptions& options)
      : n_(target_count), sites_(sites), options_(options), covering_(target_count),
        cheapest_(target_count, kInf) {
    for (std::size_t s = 0; s < sites.size(); ++s) {
      for (std::size_t t = 0; t < n_; ++t) {
        if (t < sites[s].covered.universe() && sites[s].covered.test(t)) {
          covering_[t].push_back(s);
          cheapest_[t] = std::min(cheapest_[t], sites[s].weight);
        }
      }
    }
    for (auto& list : covering_) {
      std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        return sites_[a].weight < sites_[b].weight;
      });
    }
  }

  OracleResult run() {
    OracleResult result;
    for (std::size_t t = 0; t < n_; ++t) {
      if (covering_[t].empty()) {
        result.feasible = false;
        result.uncoverable_target = t;
        result.proven_optimal = true;
        return result;
      }
    }
    TargetSet covered(universe());
    std::vector<std::size_t> chosen;
    search(covered, 0.0, chosen);
    result.nodes_explored = nodes_;
    result.proven_optimal = !budget_hit_;
    if (best_cost_ == kInf) {
      // Only reachable through the cardinality limit or the node budget.
      result.feasible = false;
      result.uncoverable_target = covered.first_unset();
      return result;
    }
    result.cost = best_cost_;
    result.site_indices = best_;
    std::sort(result.site_indices.begin(), result.site_indices.end());
    return result;
  }

 private:
  std::size_t universe() const { return sites_.empty() ? n_ : sites_[0].covered.universe(); }

  std::size_t first_uncovered(const TargetSet& covered) const {
    for (std::size_t t = 0; t < n_; ++t) {
      if (!covered.test(t)) return t;
    }
    return n_;
  }

  double lower_bound(const TargetSet& covered) const {
    double lb = 0.0;
    for (std::size_t t = 0; t < n_; ++t) {
      if (!covered.test(t)) lb = std::max(lb, cheapest_[t]);
    }
    return lb;
  }

  void search(const TargetSet& covered, double cost, std::vector<std::size_t>& chosen) {
    if (nodes_ >= options_.max_nodes) {
      budget_hit_ = true;
      return;
    }
    ++nodes_;
    const std::size_t t = first_uncovered(covered);
    if (t == n_) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = chosen;
      }
      return;
    }
    if (options_.max_sites && chosen.size() >= *options_.max_sites) return;
    for (auto s : covering_[t]) {
      const double next = cost + sites_[s].weight;
      if (next >= best_cost_) break;  // list is sorted by weight
      TargetSet after = covered | sites_[s].covered;
      if (next + lower_bound(after) >= best_cost_) continue;
      chosen.push_back(s);
      search(after, next, chosen);
      chosen.pop_back();
    }
  }

  std::size_t n_;
  std::span<const CandidateSite> sites_;
  ExactOptions options_;
  std::vector<std::vector<std::size_t>> covering_;
  std::vector<double> cheapest_;
  double best_cost_ = kInf;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

OracleResult exact_min_cost_cover(std::size_t target_count, std::span<const CandidateSite> sites,
                                  const ExactOptions& options) {
  return BranchAndBound(target_count, sites, options).run();
}

OracleResult greedy_cover(std::size_t target_count, std::span<const CandidateSite> sites) {
  OracleResult result;
  const std::size_t universe = sites.empty() ? target_count : sites[0].covered.universe();
  TargetSet needed(universe);
  for (std::size_t t = 0; t < target_count; ++t) needed.set(t);
  TargetSet covered(universe);
  while (!needed.is_subset_of(covered)) {
    std::size_t best = sites.size();
    double best_w = 0.0;
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < sites.size(); ++s) {
      TargetSet fresh = sites[s].covered & needed;
      fresh |= covered;
      const std::size_t gain = fresh.count() - covered.count();
      if (gain == 0) continue;
      // w / gain < best_w / best_gain, without dividing.
      if (best == sites.size() ||
          sites[s].weight * static_cast<double>(best_gain) < best_w * static_cast<double>(gain)) {
        best = s;
        best_w = sites[s].weight;
        best_gain = gain;
      }
    }
    ++result.nodes_explored;
    if (best == sites.size()) {
      result.feasible = false;
      for (std::size_t t = 0; t < target_count; ++t) {
        if (!covered.test(t)) {
          result.uncoverable_target = t;
          break;
        }
      }
      return result;
    }
    covered |= sites[best].covered;
    result.site_indices.push_back(best);
    result.cost += sites[best].weight;
  }
  std::sort(result.site_indices.begin(), result.site_indices.end());
  return result;
}

GapReport grid_refine_audit(const Instance& instance, double discrete_opt, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid_refine_audit: step must be positive");
  validate(instance);
  const double r = instance.r;
  const auto& targets = instance.targets;
  GapReport report;
  report.step = step;
  report.discrete_opt = discrete_opt;

  // Cheapest lattice point per distinct covered set. Each lattice point is
  // visited from the lowest-index target whose disk contains it.
  std::map<std::vector<std::size_t>, CandidateSite> best_by_cover;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const auto i_lo = static_cast<long>(std::floor((targets[t].x - r) / step));
    const auto i_hi = static_cast<long>(std::ceil((targets[t].x + r) / step));
    const auto j_lo = static_cast<long>(std::floor((targets[t].y - r) / step));
    const auto j_hi = static_cast<long>(std::ceil((targets[t].y + r) / step));
    for (long i = i_lo; i <= i_hi; ++i) {
      for (long j = j_lo; j <= j_hi; ++j) {
        const Point p{static_cast<double>(i) * step, static_cast<double>(j) * step};
        if (dist(p, targets[t]) > r) continue;
        bool seen_earlier = false;
        for (std::size_t u = 0; u < t && !seen_earlier; ++u) seen_earlier = dist(p, targets[u]) <= r;
        if (seen_earlier) continue;
        ++report.grid_points;
        CandidateSite site;
        site.position = p;
        site.covered = TargetSet(targets.size());
        std::vector<std::size_t> key;
        for (std::size_t u = t; u < targets.size(); ++u) {
          if (dist(p, targets[u]) <= r) {
            site.covered.set(u);
            key.push_back(u);
          }
        }
        const auto w = site_weight(p, instance.stations);
        site.weight = w.distance;
        site.origin_station = w.station;
        auto it = best_by_cover.find(key);
        if (it == best_by_cover.end()) {
          best_by_cover.emplace(std::move(key), std::move(site));
        } else if (canonical_less(site, it->second)) {
          it->second = std::move(site);
        }
      }
    }
  }
  std::vector<CandidateSite> grid_sites;
  for (auto& [key, site] : best_by_cover) grid_sites.push_back(std::move(site));
  std::sort(grid_sites.begin(), grid_sites.end(), canonical_less);
  report.grid_sites = grid_sites.size();
  const auto pruned = prune_dominated(grid_sites);
  const auto exact = exact_min_cost_cover(targets.size(), pruned);
  report.grid_opt = exact.feasible ? exact.cost : kInf;
  report.grid_solution_size = exact.site_indices.size();
  report.gap = report.grid_opt - discrete_opt;
  return report;
}

CensusReport strip_sensor_census(const Instance& instance, std::span<const Point> placements,
                                 int m, int f) {
  CensusReport report;
  report.square_side = std::sqrt(0.5) * instance.r;
  if (placements.empty()) return report;
  const Grid grid = bounding_box(instance, m);
  const double side = grid.cell_side();
  const double offset = grid.shift_offset(f);
  std::map<std::tuple<long, long, long>, std::size_t> per_strip;
  std::map<std::pair<long, long>, std::size_t> per_square;
  for (const auto& placement : placements) {
    const Point p = grid.to_internal(placement);
    const double lx = p.x - offset;
    const double ly = p.y - offset;
    const auto ci = static_cast<long>(std::floor(lx / side));
    const auto cj = static_cast<long>(std::floor(ly / side));
    const auto strip = static_cast<long>(
        std::clamp(std::floor((lx - static_cast<double>(ci) * side) / grid.strip_width()), 0.0,
                   static_cast<double>(m - 1)));
    ++per_strip[{ci, cj, strip}];
    // r-normalized coordinates, squares of side sqrt(1/2).
    const double unit = std::sqrt(0.5);
    ++per_square[{static_cast<long>(std::floor(p.x / instance.r / unit)),
                  static_cast<long>(std::floor(p.y / instance.r / unit))}];
  }
  for (const auto& [key, count] : per_strip) report.max_per_strip = std::max(report.max_per_strip, count);
  for (const auto& [key, count] : per_square) report.max_per_square = std::max(report.max_per_square, count);
  return report;
}

}  // namespace kmmtc
