#pragma once

/// \file
/// \brief Shifted square grids of side 2mr and their width-2r vertical strips.
///
/// Internally every coordinate is translated so that the smallest target x and
/// y land on 2mr, leaving one empty cell of margin around the bounding box.
/// Round f moves the cell lattice by (2fr, 2fr); over f = 0..m-1 every
/// multiple of 2r is a cell boundary exactly once. Membership is half-open.

#include <cstddef>
#include <span>
#include <vector>

#include "kmmtc/geometry.hpp"
#include "kmmtc/instance.hpp"
#include "kmmtc/sites.hpp"

namespace kmmtc {

struct Grid {
  Point origin;         ///< world position of the internal origin (lower-left of Q)
  double extent = 0.0;  ///< side of Q in internal coordinates
  int m = 1;
  double r = 1.0;
  int shift_round = 0;

  double cell_side() const { return 2.0 * m * r; }
  double strip_width() const { return 2.0 * r; }
  double shift_offset(int f) const { return 2.0 * f * r; }

  Point to_internal(const Point& p) const { return {p.x - origin.x, p.y - origin.y}; }
  Point to_world(const Point& p) const { return {p.x + origin.x, p.y + origin.y}; }
};

struct Strip {
  int index = 0;      ///< 0-based position within the cell, left to right
  double x_lo = 0.0;  ///< world x range [x_lo, x_hi)
  double x_hi = 0.0;
  std::vector<std::size_t> target_indices;
  std::vector<std::size_t> site_pool;  ///< sites covering some target of this strip
};

struct Cell {
  long i = 0;
  long j = 0;
  Point lower_left;  ///< world coordinates
  double side = 0.0;
  std::vector<std::size_t> target_indices;
  std::vector<int> target_strip;  ///< strip of each entry of target_indices
  std::vector<Strip> strips;      ///< filled by strips_of_cell
};

/// Throws std::invalid_argument("nothing to cover") for an empty target set,
/// and for m < 1.
Grid bounding_box(const Instance& instance, int m);

/// Non-empty cells of round f, ordered by (i, j). Throws for f outside [0, m).
std::vector<Cell> cells_for_shift(const Grid& grid, std::span<const Point> targets, int f);

/// The m strips of `cell` with their target lists and site pools.
std::vector<Strip> strips_of_cell(const Cell& cell, int m, double r,
                                  std::span<const CandidateSite> sites);

/// cells_for_shift followed by strips_of_cell for every cell.
std::vector<Cell> decompose(const Grid& grid, std::span<const Point> targets,
                            std::span<const CandidateSite> sites, int f);

}  // namespace kmmtc
