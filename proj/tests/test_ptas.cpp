#include <doctest.h>

#include <cmath>

#include "kmmtc/generators.hpp"
#include "kmmtc/oracle.hpp"
#include "kmmtc/ptas.hpp"
#include "test_support.hpp"

using namespace kmmtc;

namespace {

PtasConfig with_m(int m) {
  PtasConfig config;
  config.m = m;
  return config;
}

}  // namespace

TEST_CASE("resolved_m") {
  PtasConfig config;
  config.epsilon = 1.0;
  CHECK(config.resolved_m() == 4);
  config.epsilon = 0.5;
  CHECK(config.resolved_m() == 8);
  config.epsilon = 0.3;
  CHECK(config.resolved_m() == 14);
  config.m = 3;
  CHECK_THROWS_AS(config.resolved_m(), std::invalid_argument);
  config.epsilon.reset();
  CHECK(config.resolved_m() == 3);
  config.m.reset();
  CHECK_THROWS_AS(config.resolved_m(), std::invalid_argument);
  config.epsilon = 0.0;
  CHECK_THROWS_AS(config.resolved_m(), std::invalid_argument);
}

TEST_CASE("a single target next to a station is free") {
  const Instance inst{{{0, 0}}, {{0.5, 0}}, 1.0};
  const auto sol = solve(inst, with_m(2));
  CHECK(sol.total_cost == 0.0);
  CHECK(sol.placements.size() == 1);
  CHECK(sol.per_round_costs.size() == 2);
}

TEST_CASE("cost lies between OPT and (1 + 4/m) OPT") {
  for (int m : {4, 8}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = gen_uniform(10, 1 + seed % 2, 1.0, 10.0, seed).instance;
      const auto sites = prepare_sites(inst);
      const double opt = exact_min_cost_cover(inst.n(), sites).cost;
      const auto sol = solve(inst, sites, with_m(m));
      CHECK(sol.total_cost >= opt - 1e-9 * std::max(1.0, opt));
      CHECK(sol.total_cost <= (1.0 + 4.0 / m) * opt + 1e-9 * std::max(1.0, opt));

      std::vector<Point> pos;
      for (const auto& p : sol.placements) pos.push_back(p.position);
      CHECK(uncovered_targets(inst, pos).empty());
      CHECK(static_cast<int>(sol.per_round_costs.size()) == m);
      CHECK(sol.total_cost == sol.per_round_costs[sol.shift_round_used]);
      for (double c : sol.per_round_costs) CHECK(c >= sol.total_cost);
      for (int f = 0; f < sol.shift_round_used; ++f) CHECK(sol.per_round_costs[f] > sol.total_cost);

      const auto audit = shift_average_audit(sol.per_round_costs, opt);
      CHECK(audit.passed);
      CHECK(audit.minimum <= audit.average * (1 + 1e-12));
    }
  }
}

TEST_CASE("shift_average_audit arithmetic") {
  const std::vector<double> costs{1.0, 2.0, 3.0, 2.0};
  const auto audit = shift_average_audit(costs, 1.5);
  CHECK(audit.average == 2.0);
  CHECK(audit.minimum == 1.0);
  CHECK(audit.bound == 3.0);
  CHECK(audit.margin == 1.0);
  CHECK(audit.passed);
  CHECK_FALSE(shift_average_audit(costs, 0.9).passed);
}

TEST_CASE("solutions are deterministic, also with parallel rounds") {
  const auto inst = gen_uniform(25, 2, 1.0, 12.0, 9).instance;
  auto config = with_m(4);
  const auto a = solve(inst, config);
  const auto b = solve(inst, config);
  config.jobs = 4;
  const auto c = solve(inst, config);
  for (const auto* other : {&b, &c}) {
    CHECK(other->total_cost == a.total_cost);
    CHECK(other->shift_round_used == a.shift_round_used);
    CHECK(other->per_round_costs == a.per_round_costs);
    CHECK(other->site_indices == a.site_indices);
    CHECK(other->counters.pairs_checked == a.counters.pairs_checked);
  }
}

TEST_CASE("keyed and pairwise transitions give the same solution") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = gen_uniform(9, 2, 1.0, 8.0, 300 + seed).instance;
    auto config = with_m(2);
    const auto keyed = solve(inst, config);
    config.dp_mode = DpMode::Pairwise;
    const auto pairwise = solve(inst, config);
    CHECK(testing::near(keyed.total_cost, pairwise.total_cost));
  }
}

TEST_CASE("verify mode reports cap consistency") {
  const auto inst = gen_uniform(10, 1, 1.0, 10.0, 1).instance;
  auto config = with_m(4);
  config.cap_policy = CapPolicy::Verify;
  const auto sol = solve(inst, config);
  CHECK(sol.cap_mismatches == 0);
  CHECK(sol.cap == auto_cap(4, 1));
}

TEST_CASE("a fixed cap that is too small throws Infeasible") {
  const Instance inst{{{0, 0}, {0, 3.5}}, {{0, 0}}, 1.0};
  auto config = with_m(2);
  config.cap_policy = CapPolicy::Fixed;
  config.fixed_cap = 1;
  CHECK_THROWS_AS(solve(inst, config), Infeasible);
  config.cap_policy = CapPolicy::Auto;
  CHECK(solve(inst, config).total_cost == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("ratio to OPT shrinks as m grows, on aggregate") {
  double total_opt = 0.0;
  std::vector<double> total(3, 0.0);
  const int ms[] = {2, 4, 8};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_uniform(10, 2, 1.0, 10.0, 700 + seed).instance;
    const auto sites = prepare_sites(inst);
    total_opt += exact_min_cost_cover(inst.n(), sites).cost;
    for (int i = 0; i < 3; ++i) total[i] += solve(inst, sites, with_m(ms[i])).total_cost;
  }
  for (int i = 0; i < 3; ++i) CHECK(total[i] <= (1.0 + 4.0 / ms[i]) * total_opt + 1e-9);
  CHECK(total[2] <= total[0] + 1e-9);
}
