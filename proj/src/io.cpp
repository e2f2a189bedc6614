#include "kmmtc/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace kmmtc {

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// First line mentioning "field", used to point at semantic errors.
std::size_t line_of_field(const std::string& text, const std::string& field) {
  const auto pos = text.find("\"" + field + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "",
                     line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
}

double number_field(const Json& doc, const std::string& field) {
  if (!doc.contains(field)) throw ParseError("missing field \"" + field + "\"", field, 0);
  const auto& v = doc.at(field);
  if (!v.is_number()) throw ParseError("field \"" + field + "\" must be a number", field, 0);
  return v.get<double>();
}

std::vector<Point> point_list(const Json& doc, const std::string& field) {
  if (!doc.contains(field)) throw ParseError("missing field \"" + field + "\"", field, 0);
  const auto& v = doc.at(field);
  if (!v.is_array()) throw ParseError("field \"" + field + "\" must be an array", field, 0);
  std::vector<Point> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ParseError(field + "[" + std::to_string(i) + "] must be a [x, y] pair of numbers",
                       field, 0);
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

Json point_array(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(Json::array({p.x, p.y}));
  return out;
}

template <typename F>
auto with_line(const std::string& text, F&& f) {
  try {
    return f();
  } catch (ParseError& e) {
    if (e.line == 0 && !e.field.empty()) e.line = line_of_field(text, e.field);
    throw;
  }
}

}  // namespace

Json instance_to_json(const Instance& instance, const Json& metadata) {
  Json doc = Json::object();
  doc["r"] = instance.r;
  doc["targets"] = point_array(instance.targets);
  doc["stations"] = point_array(instance.stations);
  doc["metadata"] = metadata.is_null() ? Json::object() : metadata;
  return doc;
}

LoadedInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object", "", 1);
  LoadedInstance loaded;
  loaded.instance.r = number_field(doc, "r");
  loaded.instance.targets = point_list(doc, "targets");
  loaded.instance.stations = point_list(doc, "stations");
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw ParseError("metadata must be an object", "metadata", 0);
    loaded.metadata = doc["metadata"];
  }
  if (!(loaded.instance.r > 0.0) || !std::isfinite(loaded.instance.r)) {
    throw ParseError("r must be a positive finite number", "r", 0);
  }
  if (loaded.instance.stations.empty()) {
    throw ParseError("at least one station is required", "stations", 0);
  }
  try {
    validate(loaded.instance);
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what(), "", 0);
  }
  loaded.duplicates_removed = dedup_targets(loaded.instance);
  return loaded;
}

LoadedInstance parse_instance(const std::string& text) {
  const Json doc = parse_document(text);
  return with_line(text, [&] { return instance_from_json(doc); });
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LoadedInstance read_instance(const std::filesystem::path& path) {
  return parse_instance(read_text(path));
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

void write_instance(const std::filesystem::path& path, const Instance& instance,
                    const Json& metadata) {
  write_json(path, instance_to_json(instance, metadata));
}

Json solution_to_json(const Solution& solution) {
  Json doc = Json::object();
  doc["total_cost"] = solution.total_cost;
  doc["shift_round"] = solution.shift_round_used;
  doc["per_round_costs"] = solution.per_round_costs;
  Json placements = Json::array();
  for (const auto& p : solution.placements) {
    placements.push_back({{"x", p.position.x}, {"y", p.position.y}, {"station", p.station},
                          {"weight", p.weight}});
  }
  doc["placements"] = std::move(placements);
  Json config = Json::object();
  config["m"] = solution.m;
  config["epsilon"] = solution.epsilon ? Json(*solution.epsilon) : Json(nullptr);
  config["cap_policy"] = to_string(solution.cap_policy);
  config["cap"] = solution.cap;
  config["seed"] = solution.seed;
  doc["config"] = std::move(config);
  doc["counters"] = {{"cells_solved", solution.cells_solved},
                     {"subsets_enumerated", solution.counters.subsets_enumerated},
                     {"subsets_visited", solution.counters.subsets_visited},
                     {"pairs_checked", solution.counters.pairs_checked},
                     {"cap_mismatches", solution.cap_mismatches}};
  return doc;
}

SolutionFile parse_solution(const std::string& text) {
  const Json doc = parse_document(text);
  return with_line(text, [&] {
    if (!doc.is_object()) throw ParseError("solution document must be a JSON object", "", 1);
    SolutionFile file;
    file.total_cost = number_field(doc, "total_cost");
    if (!doc.contains("shift_round") || !doc["shift_round"].is_number_integer()) {
      throw ParseError("field \"shift_round\" must be an integer", "shift_round", 0);
    }
    file.shift_round = doc["shift_round"].get<int>();
    if (doc.contains("per_round_costs")) {
      for (const auto& c : doc["per_round_costs"]) file.per_round_costs.push_back(c.get<double>());
    }
    if (doc.contains("config") && doc["config"].contains("m") && doc["config"]["m"].is_number()) {
      file.m = doc["config"]["m"].get<int>();
    }
    if (!doc.contains("placements") || !doc["placements"].is_array()) {
      throw ParseError("field \"placements\" must be an array", "placements", 0);
    }
    for (const auto& p : doc["placements"]) {
      Placement placement;
      placement.position = {number_field(p, "x"), number_field(p, "y")};
      placement.station = static_cast<std::size_t>(number_field(p, "station"));
      placement.weight = number_field(p, "weight");
      file.placements.push_back(placement);
    }
    return file;
  });
}

SolutionFile read_solution(const std::filesystem::path& path) {
  return parse_solution(read_text(path));
}

void write_solution(const std::filesystem::path& path, const Json& doc) { write_json(path, doc); }

Json report_to_json(const std::vector<ReportRecord>& records) {
  Json out = Json::array();
  for (const auto& rec : records) {
    Json counters = Json::object();
    for (const auto& [name, value] : rec.counters) counters[name] = value;
    out.push_back({{"instance", rec.instance},
                   {"algorithm", rec.algorithm},
                   {"cost", rec.cost},
                   {"runtime_ms", rec.runtime_ms},
                   {"counters", std::move(counters)}});
  }
  return out;
}

void write_report(const std::filesystem::path& path, const std::vector<ReportRecord>& records) {
  write_json(path, report_to_json(records));
}

}  // namespace kmmtc
