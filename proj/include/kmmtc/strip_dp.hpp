#pragma once

/// \file
/// \brief Exact per-cell solver: dynamic programming over the cell's strips.
///
/// For strip i with pool R_i (sites covering a target of the strip) the state
/// is the subset U of R_i actually used, |U| <= L. Because strips are 2r wide
/// a site can only cover targets in two neighbouring strips, so
///
///   b(0, U) = w(U)
///   b(i, U) = min over U' compatible with U of b(i-1, U') + w(U \ U')
///
/// where U and U' are compatible when they agree on R_{i-1} and R_i together.
/// Charging w(U \ U') bills a site shared by two strips once.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "kmmtc/grid.hpp"
#include "kmmtc/sites.hpp"

namespace kmmtc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A subset of sites, as ascending site indices.
using SiteSubset = std::vector<std::size_t>;

/// True iff U and U_prev agree on every site of `overlap` (all ascending).
bool compatible(std::span<const std::size_t> u, std::span<const std::size_t> u_prev,
                std::span<const std::size_t> overlap);

/// Every U drawn from `pool` with |U| <= cap covering all of `targets`, in
/// lexicographic order of the pool positions. Entries of `pool` flagged false
/// in `shared` (when given) are only allowed while they are needed for
/// coverage; a redundant unshared site can never lower the cost.
std::vector<SiteSubset> enumerate_strip_subsets(std::span<const std::size_t> pool,
                                                std::span<const std::size_t> targets,
                                                std::span<const CandidateSite> sites, int cap,
                                                const std::vector<bool>& shared = {},
                                                std::uint64_t* visited = nullptr);

enum class DpMode {
  /// Groups predecessor states by their projection on the overlap.
  Keyed,
  /// Examines every (U, U') pair literally.
  Pairwise,
};

struct DpOptions {
  int cap = 32;
  DpMode mode = DpMode::Keyed;
  /// Restrict coverage to the cell and drop sites dominated there.
  bool prune_local = true;
  /// Restrict unshared strip members to those needed for coverage.
  bool minimal_private = true;
  bool keep_tables = false;
};

struct DpCounters {
  std::uint64_t subsets_enumerated = 0;  ///< qualifying subsets over all strips
  std::uint64_t subsets_visited = 0;     ///< search nodes of the subset enumeration
  std::uint64_t pairs_checked = 0;       ///< (U, U') pairs, or lookups in keyed mode

  DpCounters& operator+=(const DpCounters& o) {
    subsets_enumerated += o.subsets_enumerated;
    subsets_visited += o.subsets_visited;
    pairs_checked += o.pairs_checked;
    return *this;
  }
};

/// DP layer for one strip. Subsets hold indices into the caller's site list.
struct StripTable {
  std::vector<SiteSubset> subsets;
  std::vector<double> value;  ///< b(i, U); kInfinity when U has no feasible completion
  std::vector<int> back;      ///< predecessor subset in the previous table, -1 for none
  double best = kInfinity;    ///< a_i
};

struct CellSolution {
  bool feasible = true;
  int infeasible_strip = -1;
  std::vector<std::size_t> site_indices;  ///< ascending indices into the caller's site list
  double cost = 0.0;                      ///< summed weight of site_indices
  double dp_value = 0.0;                  ///< a_m as computed by the recurrence
  DpCounters counters;
  std::vector<std::size_t> pool_sizes;  ///< |R_i| per strip after local pruning
  std::vector<StripTable> tables;       ///< only with DpOptions::keep_tables
};

/// Optimal cover of the cell's targets by `sites` with at most `cap` sites per
/// strip. `cell.strips` must be populated (see strips_of_cell / decompose).
CellSolution solve_cell(const Cell& cell, std::span<const CandidateSite> sites,
                        const DpOptions& options = {});

/// Default per-strip cap L = 8m + 16k.
int auto_cap(int m, std::size_t k);

struct CapCheck {
  int cap = 0;
  double cost_at_cap = kInfinity;
  double cost_at_cap_plus_one = kInfinity;
  bool feasible_at_cap = false;
  bool consistent = false;  ///< costs agree: the cap did not bind
};

/// Solves the cell with cap L and L + 1 and reports whether the costs agree.
CapCheck verify_cap(const Cell& cell, std::span<const CandidateSite> sites, int cap,
                    const DpOptions& options = {});

}  // namespace kmmtc
