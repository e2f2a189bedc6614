#include "kmmtc/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace kmmtc {

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

GeneratedInstance gen_uniform(std::size_t n, std::size_t k, double r, double extent,
                              std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_uniform: n must be at least 1");
  if (k < 1) throw std::invalid_argument("gen_uniform: k must be at least 1");
  if (!(extent > 0.0)) throw std::invalid_argument("gen_uniform: extent must be positive");
  if (!(r > 0.0)) throw std::invalid_argument("gen_uniform: r must be positive");
  std::mt19937_64 rng(seed);
  GeneratedInstance out;
  out.instance.r = r;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = unit_double(rng) * extent;
    out.instance.targets.push_back({x, unit_double(rng) * extent});
  }
  for (std::size_t i = 0; i < k; ++i) {
    const double x = unit_double(rng) * extent;
    out.instance.stations.push_back({x, unit_double(rng) * extent});
  }
  out.metadata = {{"generator", "uniform"}, {"n", n},           {"k", k},
                  {"r", r},                 {"extent", extent}, {"seed", seed}};
  return out;
}

GeneratedInstance gen_counterexample(std::size_t k, double alpha, double beta, double r) {
  if (k < 2) throw std::invalid_argument("gen_counterexample: k must be at least 2");
  if (!(alpha > 0.0)) throw std::invalid_argument("gen_counterexample: alpha must be positive");
  if (!(r > 0.0)) throw std::invalid_argument("gen_counterexample: r must be positive");
  const double beta_limit = alpha / (2.0 * static_cast<double>(k));
  if (!(beta > 0.0) || !(beta < beta_limit)) {
    throw std::invalid_argument("gen_counterexample: beta must lie in (0, alpha / (2k))");
  }
  GeneratedInstance out;
  out.instance.r = r;
  const double reach = r + alpha + beta;
  for (std::size_t i = 0; i < k; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    out.instance.targets.push_back({alpha * c, alpha * s});
    out.instance.stations.push_back({reach * c, reach * s});
  }
  out.metadata = {{"generator", "counterexample"}, {"k", k},       {"alpha", alpha},
                  {"beta", beta},                  {"r", r},       {"beta_limit", beta_limit}};
  return out;
}

}  // namespace kmmtc
