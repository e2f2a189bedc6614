#include <doctest.h>

#include <random>

#include "kmmtc/generators.hpp"
#include "kmmtc/oracle.hpp"
#include "kmmtc/sites.hpp"
#include "test_support.hpp"

using namespace kmmtc;

namespace {

CandidateSite site(std::vector<std::size_t> covered, double w, Point pos, std::size_t n = 4) {
  CandidateSite s;
  s.covered = TargetSet(n);
  for (auto t : covered) s.covered.set(t);
  s.weight = w;
  s.position = pos;
  return s;
}

}  // namespace

TEST_CASE("site_weight") {
  const std::vector<Point> two{{3, 4}, {1, 1}};
  auto w = site_weight({0, 0}, two);
  CHECK(w.distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(w.station == 1);

  const std::vector<Point> same{{2, 2}};
  w = site_weight({2, 2}, same);
  CHECK(w.distance == 0.0);
  CHECK(w.station == 0);

  const std::vector<Point> tie{{1, 0}, {-1, 0}};
  w = site_weight({0, 0}, tie);
  CHECK(w.distance == 1.0);
  CHECK(w.station == 0);

  CHECK_THROWS_AS(site_weight({0, 0}, std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("candidate sites for a single target and a distant station") {
  // Classes: station (5,0) covers nothing; target (0,0) costs 5; the projection
  // (1,0) of the station onto D(t) costs 4 and dominates.
  const Instance inst{{{0, 0}}, {{5, 0}}, 1.0};
  const auto all = generate_candidate_sites(inst);
  CHECK(all.size() == 2);
  const auto pruned = prune_dominated(all);
  REQUIRE(pruned.size() == 1);
  CHECK(pruned[0].position == Point{1, 0});
  CHECK(pruned[0].weight == 4.0);
  CHECK(pruned[0].covered.indices() == std::vector<std::size_t>{0});
}

TEST_CASE("a station inside a detection circle yields a free site") {
  const Instance inst{{{0, 0}}, {{0.5, 0}}, 1.0};
  const auto sites = prune_dominated(generate_candidate_sites(inst));
  REQUIRE(!sites.empty());
  CHECK(sites[0].position == Point{0.5, 0});
  CHECK(sites[0].weight == 0.0);
  CHECK(sites[0].covered.test(0));
}

TEST_CASE("site count without intersecting detection circles") {
  Instance inst;
  inst.r = 1.0;
  for (int i = 0; i < 6; ++i) inst.targets.push_back({5.0 * i, 0.0});
  inst.stations = {{1, 7}, {20, -9}, {-4, 3}};
  const auto sites = generate_candidate_sites(inst);
  CHECK(sites.size() <= inst.n() + inst.k() + inst.n() * inst.k());
}

TEST_CASE("generated sites are consistent and bounded") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = gen_uniform(8, 1 + seed % 3, 1.0, 5.0, seed).instance;
    const auto all = generate_candidate_sites(inst);
    const std::size_t n = inst.n(), k = inst.k();
    CHECK(all.size() <= n * (n - 1) + n + k + n * k);
    const auto pruned = prune_dominated(all);
    for (const auto& s : pruned) {
      const auto fresh = make_site(s.position, inst);
      CHECK(fresh.covered == s.covered);
      CHECK(fresh.weight == s.weight);
      CHECK(fresh.origin_station == s.origin_station);
    }
    for (std::size_t t = 0; t < n; ++t) {
      const bool covered = std::any_of(pruned.begin(), pruned.end(),
                                       [&](const CandidateSite& s) { return s.covered.test(t); });
      CHECK(covered);
    }
    // Output order is (weight, x, y).
    for (std::size_t i = 1; i < pruned.size(); ++i) CHECK(!canonical_less(pruned[i], pruned[i - 1]));
  }
}

TEST_CASE("prune_dominated examples") {
  SUBCASE("strict domination") {
    const std::vector<CandidateSite> in{site({0}, 4, {0, 0}), site({0, 1}, 3, {1, 0})};
    const auto out = prune_dominated(in);
    REQUIRE(out.size() == 1);
    CHECK(out[0].position == Point{1, 0});
  }
  SUBCASE("incomparable sites survive") {
    const std::vector<CandidateSite> in{site({0}, 1, {0, 0}), site({1}, 1, {1, 0})};
    CHECK(prune_dominated(in).size() == 2);
  }
  SUBCASE("equal sites keep the smaller position") {
    const std::vector<CandidateSite> in{site({0}, 2, {3, 0}), site({0}, 2, {1, 5})};
    const auto out = prune_dominated(in);
    REQUIRE(out.size() == 1);
    CHECK(out[0].position == Point{1, 5});
  }
  SUBCASE("equal weight, superset wins") {
    const std::vector<CandidateSite> in{site({0}, 2, {0, 0}), site({0, 1}, 2, {9, 9})};
    const auto out = prune_dominated(in);
    REQUIRE(out.size() == 1);
    CHECK(out[0].position == Point{9, 9});
  }
}

TEST_CASE("pruning never changes the optimum") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 3 + seed % 6;  // up to 8
    const auto inst = gen_uniform(n, 1 + seed % 2, 1.0, 4.0, 1000 + seed).instance;
    const auto all = generate_candidate_sites(inst);
    const auto pruned = prune_dominated(all);
    const auto full = exact_min_cost_cover(n, all);
    const auto small = exact_min_cost_cover(n, pruned);
    REQUIRE(full.proven_optimal);
    REQUIRE(small.proven_optimal);
    CHECK(testing::near(full.cost, small.cost));
  }
}
