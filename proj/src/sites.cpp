#include "kmmtc/sites.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kmmtc {

StationDistance site_weight(const Point& position, std::span<const Point> stations) {
  if (stations.empty()) throw std::invalid_argument("site_weight: no stations");
  StationDistance best{dist(position, stations[0]), 0};
  for (std::size_t j = 1; j < stations.size(); ++j) {
    const double d = dist(position, stations[j]);
    if (d < best.distance) best = {d, j};
  }
  return best;
}

CandidateSite make_site(const Point& position, const Instance& instance) {
  CandidateSite site;
  site.position = position;
  site.covered = TargetSet(instance.n());
  for (auto i : covered_targets(position, instance.targets, instance.r)) site.covered.set(i);
  const auto w = site_weight(position, instance.stations);
  site.weight = w.distance;
  site.origin_station = w.station;
  return site;
}

std::vector<Point> candidate_positions(const Instance& instance) {
  const auto& targets = instance.targets;
  const double r = instance.r;
  std::vector<Point> out;
  out.insert(out.end(), instance.stations.begin(), instance.stations.end());
  out.insert(out.end(), targets.begin(), targets.end());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      auto cut = circle_circle_intersections(targets[i], targets[j], r);
      out.insert(out.end(), cut.points.begin(), cut.points.end());
    }
  }
  for (const auto& t : targets) {
    for (const auto& p : instance.stations) out.push_back(nearest_point_on_circle(t, r, p));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool canonical_less(const CandidateSite& a, const CandidateSite& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return lex_less(a.position, b.position);
}

std::vector<CandidateSite> generate_candidate_sites(const Instance& instance) {
  std::vector<CandidateSite> sites;
  for (const auto& pos : candidate_positions(instance)) {
    auto site = make_site(pos, instance);
    if (!site.covered.empty()) sites.push_back(std::move(site));
  }
  std::sort(sites.begin(), sites.end(), canonical_less);
  return sites;
}

std::vector<std::size_t> undominated_indices(std::span<const CandidateSite> sites) {
  // Any dominator sorts before what it dominates under (weight, -|covered|, x, y),
  // and dominance is transitive, so checking against survivors suffices.
  std::vector<std::size_t> order(sites.size());
  std::vector<std::size_t> counts(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) counts[i] = sites[i].covered.count();
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sites[a].weight != sites[b].weight) return sites[a].weight < sites[b].weight;
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    if (sites[a].position != sites[b].position) return lex_less(sites[a].position, sites[b].position);
    return a < b;
  });

  std::vector<std::size_t> kept;
  for (auto i : order) {
    const auto& s = sites[i];
    if (s.covered.empty()) continue;
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t j) {
      return s.covered.is_subset_of(sites[j].covered);
    });
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    if (canonical_less(sites[a], sites[b])) return true;
    if (canonical_less(sites[b], sites[a])) return false;
    return a < b;
  });
  return kept;
}

std::vector<CandidateSite> prune_dominated(std::span<const CandidateSite> sites) {
  std::vector<CandidateSite> out;
  for (auto i : undominated_indices(sites)) out.push_back(sites[i]);
  return out;
}

}  // namespace kmmtc
