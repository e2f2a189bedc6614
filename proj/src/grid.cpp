#include "kmmtc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace kmmtc {

Grid bounding_box(const Instance& instance, int m) {
  if (instance.targets.empty()) throw std::invalid_argument("nothing to cover");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  double min_x = instance.targets[0].x, min_y = instance.targets[0].y;
  double max_x = min_x, max_y = min_y;
  for (const auto& t : instance.targets) {
    min_x = std::min(min_x, t.x);
    min_y = std::min(min_y, t.y);
    max_x = std::max(max_x, t.x);
    max_y = std::max(max_y, t.y);
  }
  Grid g;
  g.m = m;
  g.r = instance.r;
  const double margin = g.cell_side();
  g.origin = {min_x - margin, min_y - margin};
  g.extent = std::max(max_x - min_x, max_y - min_y) + 2.0 * margin;
  return g;
}

std::vector<Cell> cells_for_shift(const Grid& grid, std::span<const Point> targets, int f) {
  if (f < 0 || f >= grid.m) throw std::invalid_argument("shift round out of range");
  const double side = grid.cell_side();
  const double offset = grid.shift_offset(f);
  std::map<std::pair<long, long>, Cell> cells;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const Point p = grid.to_internal(targets[t]);
    const double lx = p.x - offset;
    const double ly = p.y - offset;
    const auto ci = static_cast<long>(std::floor(lx / side));
    const auto cj = static_cast<long>(std::floor(ly / side));
    auto [it, inserted] = cells.try_emplace({ci, cj});
    Cell& cell = it->second;
    if (inserted) {
      cell.i = ci;
      cell.j = cj;
      cell.side = side;
      cell.lower_left = grid.to_world({offset + static_cast<double>(ci) * side,
                                       offset + static_cast<double>(cj) * side});
    }
    const double local = lx - static_cast<double>(ci) * side;
    const int strip =
        std::clamp(static_cast<int>(std::floor(local / grid.strip_width())), 0, grid.m - 1);
    cell.target_indices.push_back(t);
    cell.target_strip.push_back(strip);
  }
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (auto& [key, cell] : cells) out.push_back(std::move(cell));
  return out;
}

std::vector<Strip> strips_of_cell(const Cell& cell, int m, double r,
                                  std::span<const CandidateSite> sites) {
  std::vector<Strip> strips(static_cast<std::size_t>(m));
  const double width = 2.0 * r;
  for (int s = 0; s < m; ++s) {
    strips[s].index = s;
    strips[s].x_lo = cell.lower_left.x + s * width;
    strips[s].x_hi = cell.lower_left.x + (s + 1) * width;
  }
  for (std::size_t k = 0; k < cell.target_indices.size(); ++k) {
    strips[cell.target_strip[k]].target_indices.push_back(cell.target_indices[k]);
  }
  for (auto& strip : strips) {
    for (std::size_t s = 0; s < sites.size(); ++s) {
      const bool hits = std::any_of(strip.target_indices.begin(), strip.target_indices.end(),
                                    [&](std::size_t t) { return sites[s].covered.test(t); });
      if (hits) strip.site_pool.push_back(s);
    }
  }
  return strips;
}

std::vector<Cell> decompose(const Grid& grid, std::span<const Point> targets,
                            std::span<const CandidateSite> sites, int f) {
  auto cells = cells_for_shift(grid, targets, f);
  for (auto& cell : cells) cell.strips = strips_of_cell(cell, grid.m, grid.r, sites);
  return cells;
}

}  // namespace kmmtc
