#pragma once

/// \file
/// \brief JSON documents for instances, solutions and reports.
///
///   instance: {"r": x, "targets": [[x,y],...], "stations": [[x,y],...], "metadata": {...}}
///   solution: {"total_cost": x, "shift_round": f, "per_round_costs": [...],
///              "placements": [{"x":..,"y":..,"station":i,"weight":w},...], "config": {...}}
///   report:   [{"instance":..,"algorithm":..,"cost":..,"runtime_ms":..,"counters":{...}},...]
///
/// Numbers are written in the shortest form that reads back to the same double.

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmmtc/instance.hpp"
#include "kmmtc/ptas.hpp"

namespace kmmtc {

using Json = nlohmann::ordered_json;

/// Malformed or invalid document. `field` names the offending member (empty
/// for syntax errors), `line` is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string field, std::size_t line)
      : std::runtime_error(message), field(std::move(field)), line(line) {}
  std::string field;
  std::size_t line;
};

struct LoadedInstance {
  Instance instance;
  Json metadata = Json::object();
  std::size_t duplicates_removed = 0;
};

Json instance_to_json(const Instance& instance, const Json& metadata = Json::object());
LoadedInstance instance_from_json(const Json& doc);
LoadedInstance parse_instance(const std::string& text);
LoadedInstance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& instance,
                    const Json& metadata = Json::object());

Json solution_to_json(const Solution& solution);

/// Fields of a solution document needed to re-check and render it.
struct SolutionFile {
  double total_cost = 0.0;
  int shift_round = 0;
  int m = 0;  ///< 0 when the document carries no grid (exact solutions)
  std::vector<double> per_round_costs;
  std::vector<Placement> placements;
};

SolutionFile parse_solution(const std::string& text);
SolutionFile read_solution(const std::filesystem::path& path);
void write_solution(const std::filesystem::path& path, const Json& doc);

struct ReportRecord {
  std::string instance;
  std::string algorithm;
  double cost = 0.0;
  double runtime_ms = 0.0;
  std::map<std::string, double> counters;
};

Json report_to_json(const std::vector<ReportRecord>& records);
void write_report(const std::filesystem::path& path, const std::vector<ReportRecord>& records);

/// Writes `doc` pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const Json& doc);
std::string read_text(const std::filesystem::path& path);

}  // namespace kmmtc
