// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "kmmtc/generators.hpp"
#include "kmmtc/geometry.hpp"
#include "kmmtc/grid.hpp"
#include "kmmtc/oracle.hpp"
#include "kmmtc/ptas.hpp"
#include "kmmtc/strip_dp.hpp"

using namespace kmmtc;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double tol(double x) { return 1e-9 * std::max(1.0, std::abs(x)); }

PtasConfig with_m(int m, CapPolicy policy = CapPolicy::Auto) {
  PtasConfig config;
  config.m = m;
  config.cap_policy = policy;
  return config;
}

struct Case {
  Instance instance;
  std::vector<CandidateSite> sites;
  double opt = 0.0;
  std::vector<std::vector<double>> round_costs;  // per m in kMs
};

constexpr int kMs[] = {2, 4, 8};

std::vector<Case> random_set() {
  std::vector<Case> cases;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Case c;
    c.instance = gen_uniform(1 + seed % 10, 1 + seed % 2, 1.0, 10.0, seed).instance;
    c.sites = prepare_sites(c.instance);
    cases.push_back(std::move(c));
  }
  return cases;
}

void sandwich(std::vector<Case>& cases) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t violations = 0, solved = 0;
  double worst = 1.0;
  for (auto& c : cases) {
    const auto exact = exact_min_cost_cover(c.instance.n(), c.sites);
    c.opt = exact.cost;
    for (int m : kMs) {
      const auto sol = solve(c.instance, c.sites, with_m(m));
      ++solved;
      c.round_costs.push_back(sol.per_round_costs);
      const bool ok = exact.proven_optimal && sol.total_cost >= c.opt - tol(c.opt) &&
                      sol.total_cost <= (1.0 + 4.0 / m) * c.opt + tol(c.opt);
      if (!ok) ++violations;
      if (c.opt > 0) worst = std::max(worst, sol.total_cost / c.opt);
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, violations == 0 && secs < 300.0,
         fmt("%zu solves, %zu outside [OPT, (1+4/m) OPT], worst ratio %.6f, %.2f s", solved,
             violations, worst, secs));
}

void single_cell() {
  std::mt19937_64 rng(20240601);
  std::size_t mismatches = 0, inconsistent = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + trial % 3;
    Instance inst;
    inst.r = 1.0;
    const double side = 2.0 * m * 0.999;
    std::uniform_real_distribution<double> inside(0.0, side), around(-2.0, side + 2.0);
    const std::size_t n = 3 + trial % 8, k = 1 + trial % 2;
    for (std::size_t i = 0; i < n; ++i) inst.targets.push_back({inside(rng), inside(rng)});
    for (std::size_t j = 0; j < k; ++j) inst.stations.push_back({around(rng), around(rng)});
    const auto sites = prepare_sites(inst);
    const auto cells = decompose(bounding_box(inst, m), inst.targets, sites, 0);
    if (cells.size() != 1) {
      ++mismatches;
      continue;
    }
    const auto oracle = exact_min_cost_cover(inst.n(), sites);
    const int cap = auto_cap(m, k);
    const auto dp = solve_cell(cells[0], sites, {.cap = cap});
    if (!dp.feasible || std::abs(dp.cost - oracle.cost) > tol(oracle.cost)) ++mismatches;
    if (!verify_cap(cells[0], sites, cap).consistent) ++inconsistent;
  }
  report(2, mismatches == 0 && inconsistent == 0,
         fmt("100 single-cell instances, %zu DP/oracle mismatches, %zu cap checks inconsistent",
             mismatches, inconsistent));
}

void counterexample() {
  const double alpha = 1.0, beta = 0.01, r = 1.0;
  bool ok = true;
  std::string detail;
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto inst = gen_counterexample(k, alpha, beta, r).instance;
    const auto sites = prepare_sites(inst);
    const auto exact = exact_min_cost_cover(inst.n(), sites);
    const auto limited = exact_min_cost_cover(inst.n(), sites, {.max_sites = k - 1});
    const auto ptas = solve(inst, sites, with_m(4));
    const double target = k * beta;
    const bool row = exact.site_indices.size() == k && std::abs(exact.cost - target) <= 1e-9 &&
                     ptas.placements.size() == k && std::abs(ptas.total_cost - target) <= 1e-9 &&
                     limited.cost > exact.cost + 1e-9;
    ok = ok && row;
    detail += fmt("k=%zu:%zu sites %.6f vs %.6f with <=%zu; ", k, exact.site_indices.size(),
                  exact.cost, limited.feasible ? limited.cost : INFINITY, k - 1);
  }
  report(3, ok, detail);
}

void geometry() {
  bool ok = std::abs(coverage_angle_halfwidth(0.5, 0.25, 1.0) - std::acos(13.0 / 20.0)) <= 1e-12;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t sector_miss = 0, sprime_miss = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const double r = 0.5 + 2.0 * unit(rng);
    const double a = r / 2.0 * (0.02 + 0.98 * unit(rng));
    const double a_prime = a / 2.0 * (0.02 + 0.98 * unit(rng));
    const double theta = coverage_angle_halfwidth(a, a_prime, r);
    for (int i = 0; i < 10; ++i) {
      const double rho = (r + a_prime) * unit(rng);
      const double phi = theta * (2.0 * unit(rng) - 1.0);
      const Point q{rho * std::cos(phi), rho * std::sin(phi)};
      if (!covers({0, 0}, q, r) && !covers({a, 0}, q, r)) ++sector_miss;
    }
    const double delta = a / 4.0 * (0.02 + 0.98 * unit(rng));
    if (!(s_prime_location(a, r, delta).x > 2.0 * delta)) ++sprime_miss;
  }
  ok = ok && sector_miss == 0 && sprime_miss == 0;
  report(4, ok,
         fmt("theta(r/2, r/4) = %.15f, %zu sector misses in 1e5 samples, %zu s' violations in 1e4",
             coverage_angle_halfwidth(0.5, 0.25, 1.0), sector_miss, sprime_miss));
}

void discretization() {
  std::size_t bad = 0;
  double worst_gap = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = gen_uniform(1 + seed % 5, 1 + seed % 2, 1.0, 3.0, 9000 + seed).instance;
    const auto exact = exact_min_cost_cover(inst.n(), prepare_sites(inst));
    const auto gap = grid_refine_audit(inst, exact.cost, inst.r / 200.0);
    const double slack = 0.02 * inst.r * static_cast<double>(exact.site_indices.size());
    if (gap.grid_opt < exact.cost - 1e-9 || exact.cost > gap.grid_opt + slack) ++bad;
    // The lattice optimum also converges from above.
    if (gap.grid_opt > exact.cost + slack) ++bad;
    worst_gap = std::max(worst_gap, gap.gap);
  }
  report(5, bad == 0,
         fmt("50 instances at step r/200, %zu violations, largest grid - discrete gap %.6f", bad,
             worst_gap));
}

void shift_average(const std::vector<Case>& cases) {
  std::size_t failed = 0, audits = 0;
  double min_margin = INFINITY;
  for (const auto& c : cases) {
    for (const auto& costs : c.round_costs) {
      const auto audit = shift_average_audit(costs, c.opt);
      ++audits;
      if (!audit.passed) ++failed;
      min_margin = std::min(min_margin, audit.margin);
    }
  }
  report(6, failed == 0 && audits == 600,
         fmt("%zu audits, %zu failed, smallest margin %.6f", audits, failed, min_margin));
}

void strip_independence() {
  // Random sensor positions against random target sets: the targets a sensor
  // covers inside a cell never span more than two adjacent strips.
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t found = 0, trials = 0;
  while (trials < 100000) {
    const int m = 2 + static_cast<int>(unit(rng) * 7);
    const double r = 0.25 + 2.0 * unit(rng);
    const double extent = 2.0 * m * r * 2.0;
    Instance inst;
    inst.r = r;
    for (int i = 0; i < 40; ++i) inst.targets.push_back({extent * unit(rng), extent * unit(rng)});
    inst.stations.push_back({0, 0});
    const auto grid = bounding_box(inst, m);
    const int f = static_cast<int>(unit(rng) * m);
    const auto cells = cells_for_shift(grid, inst.targets, f);
    for (int s = 0; s < 100 && trials < 100000; ++s, ++trials) {
      const Point site{extent * unit(rng), extent * unit(rng)};
      for (const auto& cell : cells) {
        int lo = m, hi = -1;
        for (std::size_t t = 0; t < cell.target_indices.size(); ++t) {
          if (!covers(site, inst.targets[cell.target_indices[t]], r)) continue;
          lo = std::min(lo, cell.target_strip[t]);
          hi = std::max(hi, cell.target_strip[t]);
        }
        if (hi - lo >= 2) ++found;
      }
    }
  }
  report(7, found == 0, fmt("%zu trials, %zu sensors reaching non-adjacent strips", trials, found));
}

void pair_envelope() {
  std::printf("  %3s %3s %6s %14s %18s\n", "m", "L", "cells", "max pairs", "log10 envelope");
  bool ok = true;
  std::size_t cells_checked = 0;
  for (int m : {2, 3, 4}) {
    for (int cap : {1, 2, 3}) {
      std::uint64_t max_pairs = 0;
      double max_log_env = -INFINITY;
      std::size_t cells_here = 0;
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = gen_uniform(10, 2, 1.0, 6.0, 4000 + seed).instance;
        const auto sites = prepare_sites(inst);
        for (const auto& cell : decompose(bounding_box(inst, m), inst.targets, sites, 0)) {
          const auto sol = solve_cell(cell, sites, {.cap = cap, .mode = DpMode::Pairwise});
          // log(m * sum_i max(1, |R_i|)^(2L)) via log-sum-exp
          std::vector<double> logs;
          for (auto size : sol.pool_sizes) {
            logs.push_back(2.0 * cap * std::log(std::max<double>(1.0, static_cast<double>(size))));
          }
          const double top = *std::max_element(logs.begin(), logs.end());
          double acc = 0.0;
          for (double l : logs) acc += std::exp(l - top);
          const double log_env = std::log(static_cast<double>(m)) + top + std::log(acc);
          const double log_pairs = std::log(std::max<double>(1.0, sol.counters.pairs_checked));
          if (log_pairs > log_env + 1e-12) ok = false;
          max_pairs = std::max(max_pairs, sol.counters.pairs_checked);
          max_log_env = std::max(max_log_env, log_env);
          ++cells_here;
        }
      }
      cells_checked += cells_here;
      std::printf("  %3d %3d %6zu %14llu %18.3f\n", m, cap, cells_here,
                  static_cast<unsigned long long>(max_pairs), max_log_env / std::log(10.0));
    }
  }
  report(8, ok, fmt("%zu cells, pairs_checked within m * sum max(1,|R_i|)^(2L)", cells_checked));
}

}  // namespace

int main() {
  auto cases = random_set();
  sandwich(cases);
  single_cell();
  counterexample();
  geometry();
  discretization();
  shift_average(cases);
  strip_independence();
  pair_envelope();
  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAILED", failures);
  return failures == 0 ? 0 : 1;
}
