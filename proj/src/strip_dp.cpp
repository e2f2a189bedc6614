#include "kmmtc/strip_dp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace kmmtc {

bool compatible(std::span<const std::size_t> u, std::span<const std::size_t> u_prev,
                std::span<const std::size_t> overlap) {
  for (auto s : overlap) {
    const bool in_u = std::binary_search(u.begin(), u.end(), s);
    const bool in_prev = std::binary_search(u_prev.begin(), u_prev.end(), s);
    if (in_u != in_prev) return false;
  }
  return true;
}

namespace {

class SubsetEnumerator {
 public:
  SubsetEnumerator(std::span<const std::size_t> pool, std::span<const std::size_t> targets,
                   std::span<const CandidateSite> sites, int cap, const std::vector<bool>& shared)
      : pool_(pool), cap_(cap) {
    const std::size_t universe = sites[pool.front()].covered.universe();
    need_ = TargetSet(universe);
    for (auto t : targets) need_.set(t);
    masks_.reserve(pool.size());
    for (auto s : pool) masks_.push_back(sites[s].covered & need_);
    suffix_.assign(pool.size() + 1, TargetSet(universe));
    for (std::size_t j = pool.size(); j-- > 0;) suffix_[j] = suffix_[j + 1] | masks_[j];
    shared_ = shared.empty() ? std::vector<bool>(pool.size(), true) : shared;
    if (shared_.size() != pool.size()) {
      throw std::invalid_argument("enumerate_strip_subsets: shared flags do not match pool");
    }
  }

  std::vector<SiteSubset> run(std::uint64_t* visited) {
    std::vector<std::size_t> current;
    TargetSet covered(need_.universe());
    search(0, current, covered);
    if (visited != nullptr) *visited += visited_;
    return std::move(out_);
  }

 private:
  bool irredundant(const std::vector<std::size_t>& current) const {
    for (std::size_t a = 0; a < current.size(); ++a) {
      if (shared_[current[a]]) continue;
      TargetSet rest(need_.universe());
      for (std::size_t b = 0; b < current.size(); ++b) {
        if (b != a) rest |= masks_[current[b]];
      }
      if (need_.is_subset_of(rest)) return false;
    }
    return true;
  }

  void search(std::size_t start, std::vector<std::size_t>& current, const TargetSet& covered) {
    ++visited_;
    const bool complete = need_.is_subset_of(covered);
    if (complete && irredundant(current)) {
      SiteSubset subset;
      subset.reserve(current.size());
      for (auto j : current) subset.push_back(pool_[j]);
      out_.push_back(std::move(subset));
    }
    if (static_cast<int>(current.size()) >= cap_) return;
    for (std::size_t j = start; j < pool_.size(); ++j) {
      if (!need_.is_subset_of(covered | suffix_[j])) break;
      if (!shared_[j] && masks_[j].is_subset_of(covered)) continue;
      current.push_back(j);
      search(j + 1, current, covered | masks_[j]);
      current.pop_back();
    }
  }

  std::span<const std::size_t> pool_;
  int cap_;
  TargetSet need_;
  std::vector<TargetSet> masks_;
  std::vector<TargetSet> suffix_;
  std::vector<bool> shared_;
  std::vector<SiteSubset> out_;
  std::uint64_t visited_ = 0;
};

double subset_weight(const SiteSubset& u, std::span<const CandidateSite> sites) {
  double w = 0.0;
  for (auto s : u) w += sites[s].weight;
  return w;
}

// Weight of the members of u outside the sorted list `excluded`.
double weight_outside(const SiteSubset& u, std::span<const std::size_t> excluded,
                      std::span<const CandidateSite> sites) {
  double w = 0.0;
  for (auto s : u) {
    if (!std::binary_search(excluded.begin(), excluded.end(), s)) w += sites[s].weight;
  }
  return w;
}

SiteSubset project(const SiteSubset& u, std::span<const std::size_t> onto) {
  SiteSubset out;
  std::set_intersection(u.begin(), u.end(), onto.begin(), onto.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<SiteSubset> enumerate_strip_subsets(std::span<const std::size_t> pool,
                                                std::span<const std::size_t> targets,
                                                std::span<const CandidateSite> sites, int cap,
                                                const std::vector<bool>& shared,
                                                std::uint64_t* visited) {
  if (cap < 1) throw std::invalid_argument("enumerate_strip_subsets: cap must be at least 1");
  if (targets.empty()) {
    if (visited != nullptr) ++*visited;
    return {SiteSubset{}};
  }
  if (pool.empty()) return {};
  return SubsetEnumerator(pool, targets, sites, cap, shared).run(visited);
}

CellSolution solve_cell(const Cell& cell, std::span<const CandidateSite> sites,
                        const DpOptions& options) {
  CellSolution result;
  if (cell.target_indices.empty()) return result;
  if (cell.strips.empty()) throw std::invalid_argument("solve_cell: cell strips not populated");
  if (options.cap < 1) throw std::invalid_argument("solve_cell: cap must be at least 1");

  // Local site universe: sites touching the cell, coverage restricted to it.
  const std::size_t universe = sites.empty() ? 0 : sites[0].covered.universe();
  TargetSet cell_mask(universe);
  for (auto t : cell.target_indices) cell_mask.set(t);
  std::vector<CandidateSite> touching;
  std::vector<std::size_t> touching_global;
  for (std::size_t s = 0; s < sites.size(); ++s) {
    if (!sites[s].covered.intersects(cell_mask)) continue;
    touching.push_back(sites[s]);
    touching.back().covered &= cell_mask;
    touching_global.push_back(s);
  }
  std::vector<CandidateSite> local;
  std::vector<std::size_t> local_global;
  if (options.prune_local) {
    for (auto i : undominated_indices(touching)) {
      local.push_back(touching[i]);
      local_global.push_back(touching_global[i]);
    }
  } else {
    local = std::move(touching);
    local_global = std::move(touching_global);
  }

  const std::size_t strip_count = cell.strips.size();
  std::vector<std::vector<std::size_t>> pools(strip_count);
  for (std::size_t i = 0; i < strip_count; ++i) {
    TargetSet strip_mask(universe);
    for (auto t : cell.strips[i].target_indices) strip_mask.set(t);
    for (std::size_t s = 0; s < local.size(); ++s) {
      if (local[s].covered.intersects(strip_mask)) pools[i].push_back(s);
    }
    result.pool_sizes.push_back(pools[i].size());
  }

  std::vector<StripTable> tables(strip_count);
  for (std::size_t i = 0; i < strip_count; ++i) {
    std::vector<bool> shared(pools[i].size(), true);
    if (options.minimal_private) {
      for (std::size_t p = 0; p < pools[i].size(); ++p) {
        const auto s = pools[i][p];
        const bool in_prev = i > 0 && std::binary_search(pools[i - 1].begin(), pools[i - 1].end(), s);
        const bool in_next = i + 1 < strip_count &&
                             std::binary_search(pools[i + 1].begin(), pools[i + 1].end(), s);
        shared[p] = in_prev || in_next;
      }
    }
    auto& table = tables[i];
    table.subsets = enumerate_strip_subsets(pools[i], cell.strips[i].target_indices, local,
                                            options.cap, shared, &result.counters.subsets_visited);
    result.counters.subsets_enumerated += table.subsets.size();
    if (table.subsets.empty()) {
      result.feasible = false;
      result.infeasible_strip = static_cast<int>(i);
      return result;
    }
    table.value.assign(table.subsets.size(), kInfinity);
    table.back.assign(table.subsets.size(), -1);

    if (i == 0) {
      for (std::size_t u = 0; u < table.subsets.size(); ++u) {
        table.value[u] = subset_weight(table.subsets[u], local);
      }
    } else {
      const auto& prev = tables[i - 1];
      SiteSubset overlap;
      std::set_intersection(pools[i - 1].begin(), pools[i - 1].end(), pools[i].begin(),
                            pools[i].end(), std::back_inserter(overlap));
      if (options.mode == DpMode::Pairwise) {
        for (std::size_t u = 0; u < table.subsets.size(); ++u) {
          const auto& cur = table.subsets[u];
          for (std::size_t v = 0; v < prev.subsets.size(); ++v) {
            ++result.counters.pairs_checked;
            if (prev.value[v] == kInfinity) continue;
            if (!compatible(cur, prev.subsets[v], overlap)) continue;
            const double cand = prev.value[v] + weight_outside(cur, prev.subsets[v], local);
            if (cand < table.value[u]) {
              table.value[u] = cand;
              table.back[u] = static_cast<int>(v);
            }
          }
        }
      } else {
        // Compatible predecessors share U's projection on the overlap, and
        // U \ U' is then U minus R_{i-1} whichever U' is chosen.
        std::map<SiteSubset, std::pair<double, int>> best_by_key;
        for (std::size_t v = 0; v < prev.subsets.size(); ++v) {
          ++result.counters.pairs_checked;
          if (prev.value[v] == kInfinity) continue;
          auto key = project(prev.subsets[v], overlap);
          auto it = best_by_key.find(key);
          if (it == best_by_key.end()) {
            best_by_key.emplace(std::move(key), std::make_pair(prev.value[v], static_cast<int>(v)));
          } else if (prev.value[v] < it->second.first) {
            it->second = {prev.value[v], static_cast<int>(v)};
          }
        }
        for (std::size_t u = 0; u < table.subsets.size(); ++u) {
          ++result.counters.pairs_checked;
          const auto& cur = table.subsets[u];
          auto it = best_by_key.find(project(cur, overlap));
          if (it == best_by_key.end()) continue;
          table.value[u] = it->second.first + weight_outside(cur, pools[i - 1], local);
          table.back[u] = it->second.second;
        }
      }
    }
    int arg = -1;
    for (std::size_t u = 0; u < table.subsets.size(); ++u) {
      if (table.value[u] < table.best) {
        table.best = table.value[u];
        arg = static_cast<int>(u);
      }
    }
    if (arg < 0) {
      result.feasible = false;
      result.infeasible_strip = static_cast<int>(i);
      return result;
    }
  }

  // Walk the back-pointers from the cheapest final state.
  const auto& last = tables.back();
  int u = static_cast<int>(std::min_element(last.value.begin(), last.value.end()) - last.value.begin());
  result.dp_value = last.value[u];
  std::vector<std::size_t> chosen;
  for (std::size_t i = strip_count; i-- > 0;) {
    for (auto s : tables[i].subsets[u]) chosen.push_back(local_global[s]);
    u = tables[i].back[u];
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  result.site_indices = std::move(chosen);
  result.cost = 0.0;
  for (auto s : result.site_indices) result.cost += sites[s].weight;

  if (options.keep_tables) {
    for (auto& table : tables) {
      for (auto& subset : table.subsets) {
        for (auto& s : subset) s = local_global[s];
      }
    }
    result.tables = std::move(tables);
  }
  return result;
}

int auto_cap(int m, std::size_t k) { return 8 * m + 16 * static_cast<int>(k); }

CapCheck verify_cap(const Cell& cell, std::span<const CandidateSite> sites, int cap,
                    const DpOptions& options) {
  CapCheck check;
  check.cap = cap;
  auto opts = options;
  opts.cap = cap;
  const auto at_cap = solve_cell(cell, sites, opts);
  opts.cap = cap + 1;
  const auto above = solve_cell(cell, sites, opts);
  check.feasible_at_cap = at_cap.feasible;
  check.cost_at_cap = at_cap.feasible ? at_cap.cost : kInfinity;
  check.cost_at_cap_plus_one = above.feasible ? above.cost : kInfinity;
  if (at_cap.feasible && above.feasible) {
    const double scale = std::max({1.0, check.cost_at_cap, check.cost_at_cap_plus_one});
    check.consistent = std::abs(check.cost_at_cap - check.cost_at_cap_plus_one) <= 1e-9 * scale;
  } else {
    check.consistent = at_cap.feasible == above.feasible;
  }
  return check;
}

}  // namespace kmmtc
