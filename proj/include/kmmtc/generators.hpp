#pragma once

#include <cstddef>
#include <cstdint>

#include "kmmtc/instance.hpp"
#include "kmmtc/io.hpp"

namespace kmmtc {

struct GeneratedInstance {
  Instance instance;
  Json metadata = Json::object();
};

/// n targets and k stations i.i.d. uniform in [0, extent]^2. The stream is a
/// seeded mt19937_64 mapped to doubles with 53-bit resolution, so the output
/// is identical across standard libraries.
GeneratedInstance gen_uniform(std::size_t n, std::size_t k, double r, double extent,
                              std::uint64_t seed);

/// k targets evenly spaced on the circle of radius alpha around the origin,
/// with station i at distance r + alpha + beta on the ray through target i.
/// Covering each target from its own station costs k * beta; requires
/// k >= 2, alpha > 0 and 0 < beta < alpha / (2k).
GeneratedInstance gen_counterexample(std::size_t k, double alpha, double beta, double r);

}  // namespace kmmtc
