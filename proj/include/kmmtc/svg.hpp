#pragma once

#include <optional>
#include <string>

#include "kmmtc/instance.hpp"
#include "kmmtc/io.hpp"

namespace kmmtc {

/// SVG 1.1 drawing of an instance: one detection circle per target, targets,
/// stations and, when a solution is given, the cells and strips of its
/// winning round plus every placement and its movement segment.
std::string render_svg(const Instance& instance, const std::optional<SolutionFile>& solution = {});

}  // namespace kmmtc
