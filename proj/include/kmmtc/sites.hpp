#pragma once

/// \file
/// \brief Candidate-site discretization of the continuous placement problem.
///
/// The optimal position of a sensor that must cover a fixed target set S is
/// the point of the intersection of the disks D(t), t in S, closest to some
/// station. That point is either the station itself, the projection of the
/// station onto one detection circle, or a vertex where two detection
/// circles cross. Enumerating those three classes (plus the targets
/// themselves, which keeps isolated targets trivially coverable) yields a
/// finite site universe with the same optimum.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kmmtc/geometry.hpp"
#include "kmmtc/instance.hpp"
#include "kmmtc/target_set.hpp"

namespace kmmtc {

struct CandidateSite {
  Point position;
  TargetSet covered;
  double weight = 0.0;             ///< distance to the nearest station
  std::size_t origin_station = 0;  ///< station attaining `weight`, lowest index on ties
};

struct StationDistance {
  double distance = 0.0;
  std::size_t station = 0;
};

/// Nearest station to `position`; ties go to the lowest index.
/// Throws std::invalid_argument for an empty station list.
StationDistance site_weight(const Point& position, std::span<const Point> stations);

/// Builds the site for `position` (covered set and weight) against `instance`.
CandidateSite make_site(const Point& position, const Instance& instance);

/// All candidate positions: stations, targets, pairwise detection-circle
/// intersections and station projections onto each detection circle.
/// Exact duplicates are removed.
std::vector<Point> candidate_positions(const Instance& instance);

/// Sites for every candidate position with a non-empty covered set, sorted by
/// (weight, x, y).
std::vector<CandidateSite> generate_candidate_sites(const Instance& instance);

/// Indices of the sites that survive dominance pruning, in (weight, x, y)
/// order. Site s is dropped when another site covers a superset at no greater
/// weight; among equals the lexicographically smaller position survives.
std::vector<std::size_t> undominated_indices(std::span<const CandidateSite> sites);

std::vector<CandidateSite> prune_dominated(std::span<const CandidateSite> sites);

/// Canonical site order: (weight, x, y).
bool canonical_less(const CandidateSite& a, const CandidateSite& b);

}  // namespace kmmtc
