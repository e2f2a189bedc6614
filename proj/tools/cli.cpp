#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "kmmtc/generators.hpp"
#include "kmmtc/io.hpp"
#include "kmmtc/oracle.hpp"
#include "kmmtc/ptas.hpp"
#include "kmmtc/svg.hpp"

namespace kmmtc::cli {

namespace {

std::string fixed9(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

struct Failure {
  int exit_code;
  std::string code;
  std::string message;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

CapPolicy parse_cap(const std::string& text, int& fixed) {
  if (text == "auto") return CapPolicy::Auto;
  if (text == "verify") return CapPolicy::Verify;
  try {
    std::size_t used = 0;
    fixed = std::stoi(text, &used);
    if (used == text.size() && fixed >= 1) return CapPolicy::Fixed;
  } catch (const std::exception&) {
  }
  throw Failure{kExitUsage, "E_USAGE", "--cap expects auto, verify or a positive integer"};
}

double ratio(double cost, double opt) {
  if (opt > 0.0) return cost / opt;
  return cost <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

Json exact_to_json(const OracleResult& result, std::span<const CandidateSite> sites) {
  Json doc = Json::object();
  doc["total_cost"] = result.cost;
  doc["shift_round"] = -1;
  doc["per_round_costs"] = Json::array();
  Json placements = Json::array();
  for (auto s : result.site_indices) {
    placements.push_back({{"x", sites[s].position.x},
                          {"y", sites[s].position.y},
                          {"station", sites[s].origin_station},
                          {"weight", sites[s].weight}});
  }
  doc["placements"] = std::move(placements);
  doc["config"] = {{"algorithm", "exact"}, {"m", nullptr}};
  doc["counters"] = {{"nodes_explored", result.nodes_explored},
                     {"proven_optimal", result.proven_optimal}};
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-sink minimum movement target coverage solver", "kmmtc"};
  app.require_subcommand(1, 1);

  // generate
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  std::string family, gen_out;
  std::size_t gen_n = 10, gen_k = 1;
  double gen_r = 1.0, gen_extent = 10.0, gen_alpha = 1.0, gen_beta = 0.01;
  std::uint64_t gen_seed = 0;
  generate->add_option("--family", family, "uniform | counterexample")
      ->required()
      ->check(CLI::IsMember({"uniform", "counterexample"}));
  generate->add_option("--out", gen_out, "Instance file to write")->required();
  generate->add_option("--n", gen_n, "Target count (uniform)");
  generate->add_option("--k", gen_k, "Station count");
  generate->add_option("--r", gen_r, "Sensing radius");
  generate->add_option("--extent", gen_extent, "Side of the square region (uniform)");
  generate->add_option("--seed", gen_seed, "Random seed (uniform)");
  generate->add_option("--alpha", gen_alpha, "Target ring radius (counterexample)");
  generate->add_option("--beta", gen_beta, "Station offset (counterexample)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run the shifting approximation scheme");
  std::string solve_in, solve_out, cap_text = "auto";
  double epsilon = 0.0;
  int solve_m = 0;
  std::uint64_t solve_seed = 0;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  solve_cmd->add_option("--in", solve_in, "Instance file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--out", solve_out, "Solution file to write")->required();
  auto* eps_opt = solve_cmd->add_option("--epsilon", epsilon, "Target error; m = ceil(4/epsilon)");
  auto* m_opt = solve_cmd->add_option("--m", solve_m, "Shifting parameter");
  eps_opt->excludes(m_opt);
  solve_cmd->add_option("--cap", cap_text, "Per-strip cap: auto | verify | L");
  solve_cmd->add_option("--seed", solve_seed, "Seed echoed into the solution");
  solve_cmd->add_option("--jobs", jobs, "Rounds solved concurrently");

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum by branch and bound");
  std::string exact_in, exact_out;
  exact_cmd->add_option("--in", exact_in, "Instance file")->required()->check(CLI::ExistingFile);
  exact_cmd->add_option("--out", exact_out, "Solution file to write")->required();

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "PTAS vs exact vs greedy");
  std::string compare_in, compare_out;
  std::vector<int> compare_ms{2, 4, 8};
  bool deterministic = false;
  compare_cmd->add_option("--in", compare_in, "Instance file")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("--m", compare_ms, "Shifting parameters")->delimiter(',');
  compare_cmd->add_option("--out", compare_out, "Report file to write");
  compare_cmd->add_flag("--deterministic", deterministic, "Record runtime_ms as 0");

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "Discretization gap and shift-average audit");
  std::string audit_in, audit_out;
  double step = 0.0;
  int audit_m = 4;
  bool audit_deterministic = false;
  audit_cmd->add_option("--in", audit_in, "Instance file")->required()->check(CLI::ExistingFile);
  audit_cmd->add_option("--step", step, "Grid pitch (default r/200)");
  audit_cmd->add_option("--m", audit_m, "Shifting parameter for the shift-average audit");
  audit_cmd->add_option("--out", audit_out, "Report file to write");
  audit_cmd->add_flag("--deterministic", audit_deterministic, "Record runtime_ms as 0");

  // render
  auto* render_cmd = app.add_subcommand("render", "Draw an instance and optional solution as SVG");
  std::string render_in, render_solution, render_svg_path;
  render_cmd->add_option("--in", render_in, "Instance file")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--solution", render_solution, "Solution file")->check(CLI::ExistingFile);
  render_cmd->add_option("--svg", render_svg_path, "SVG file to write")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kmmtc: error[E_USAGE]: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      const auto gen = family == "uniform" ? gen_uniform(gen_n, gen_k, gen_r, gen_extent, gen_seed)
                                           : gen_counterexample(gen_k, gen_alpha, gen_beta, gen_r);
      write_instance(gen_out, gen.instance, gen.metadata);
      return kExitOk;
    }

    if (solve_cmd->parsed()) {
      PtasConfig config;
      if (eps_opt->count() > 0) config.epsilon = epsilon;
      if (m_opt->count() > 0) config.m = solve_m;
      if (!config.epsilon && !config.m) {
        throw Failure{kExitUsage, "E_USAGE", "one of --epsilon or --m is required"};
      }
      config.cap_policy = parse_cap(cap_text, config.fixed_cap);
      config.seed = solve_seed;
      config.jobs = jobs;
      const auto loaded = read_instance(solve_in);
      if (loaded.duplicates_removed > 0) {
        err << "kmmtc: warning[W_DUPLICATES]: removed " << loaded.duplicates_removed
            << " duplicate target(s)\n";
      }
      const auto solution = solve(loaded.instance, config);
      write_solution(solve_out, solution_to_json(solution));
      out << "cost " << fixed9(solution.total_cost) << " round " << solution.shift_round_used
          << " m " << solution.m << '\n';
      return kExitOk;
    }

    if (exact_cmd->parsed()) {
      const auto loaded = read_instance(exact_in);
      const auto sites = prepare_sites(loaded.instance);
      const auto result = exact_min_cost_cover(loaded.instance.n(), sites);
      if (!result.feasible) {
        throw Failure{kExitInfeasible, "E_INFEASIBLE",
                      "target " + std::to_string(result.uncoverable_target) + " cannot be covered"};
      }
      write_solution(exact_out, exact_to_json(result, sites));
      out << "cost " << fixed9(result.cost) << " sites " << result.site_indices.size() << '\n';
      return kExitOk;
    }

    if (compare_cmd->parsed()) {
      const auto loaded = read_instance(compare_in);
      const auto& instance = loaded.instance;
      const auto sites = prepare_sites(instance);
      std::vector<ReportRecord> records;
      auto t0 = std::chrono::steady_clock::now();
      const auto exact = exact_min_cost_cover(instance.n(), sites);
      const double exact_ms = elapsed_ms(t0);
      if (!exact.feasible) throw Failure{kExitInfeasible, "E_INFEASIBLE", "instance cannot be covered"};
      t0 = std::chrono::steady_clock::now();
      const auto greedy = greedy_cover(instance.n(), sites);
      const double greedy_ms = elapsed_ms(t0);

      out << "algorithm        m  cost          ratio         bound\n";
      auto row = [&](const std::string& name, const std::string& m, double cost, double bound) {
        char line[160];
        std::snprintf(line, sizeof line, "%-15s %2s  %-12s  %-12s  %s\n", name.c_str(), m.c_str(),
                      fixed9(cost).c_str(), fixed9(ratio(cost, exact.cost)).c_str(),
                      bound > 0 ? fixed9(bound).c_str() : "-");
        out << line;
      };
      row("exact", "-", exact.cost, 0);
      records.push_back({compare_in, "exact", exact.cost, deterministic ? 0.0 : exact_ms,
                         {{"nodes_explored", static_cast<double>(exact.nodes_explored)},
                          {"sites", static_cast<double>(exact.site_indices.size())}}});
      row("greedy", "-", greedy.cost, 0);
      records.push_back({compare_in, "greedy", greedy.cost, deterministic ? 0.0 : greedy_ms,
                         {{"ratio", ratio(greedy.cost, exact.cost)},
                          {"sites", static_cast<double>(greedy.site_indices.size())}}});
      for (int m : compare_ms) {
        PtasConfig config;
        config.m = m;
        t0 = std::chrono::steady_clock::now();
        const auto sol = solve(instance, sites, config);
        const double ms = elapsed_ms(t0);
        row("ptas", std::to_string(m), sol.total_cost, 1.0 + 4.0 / m);
        records.push_back({compare_in, "ptas_m" + std::to_string(m), sol.total_cost,
                           deterministic ? 0.0 : ms,
                           {{"m", static_cast<double>(m)},
                            {"ratio", ratio(sol.total_cost, exact.cost)},
                            {"bound", 1.0 + 4.0 / m},
                            {"pairs_checked", static_cast<double>(sol.counters.pairs_checked)},
                            {"subsets_enumerated", static_cast<double>(sol.counters.subsets_enumerated)},
                            {"cells_solved", static_cast<double>(sol.cells_solved)}}});
      }
      if (!compare_out.empty()) write_report(compare_out, records);
      return kExitOk;
    }

    if (audit_cmd->parsed()) {
      const auto loaded = read_instance(audit_in);
      const auto& instance = loaded.instance;
      if (step <= 0.0) step = instance.r / 200.0;
      const auto sites = prepare_sites(instance);
      auto t0 = std::chrono::steady_clock::now();
      const auto exact = exact_min_cost_cover(instance.n(), sites);
      if (!exact.feasible) throw Failure{kExitInfeasible, "E_INFEASIBLE", "instance cannot be covered"};
      const auto gap = grid_refine_audit(instance, exact.cost, step);
      const double gap_ms = elapsed_ms(t0);
      const double slack = 0.02 * instance.r * static_cast<double>(exact.site_indices.size());
      const bool gap_ok = gap.grid_opt >= exact.cost - 1e-9 && exact.cost <= gap.grid_opt + slack;
      PtasConfig config;
      config.m = audit_m;
      t0 = std::chrono::steady_clock::now();
      const auto sol = solve(instance, sites, config);
      const double shift_ms = elapsed_ms(t0);
      const auto shift = shift_average_audit(sol.per_round_costs, exact.cost);
      out << "discrete_opt " << fixed9(exact.cost) << '\n'
          << "grid_opt     " << fixed9(gap.grid_opt) << " (step " << fixed9(step) << ", "
          << gap.grid_points << " points)\n"
          << "gap          " << fixed9(gap.gap) << (gap_ok ? "  PASS" : "  FAIL") << '\n'
          << "shift_avg    " << fixed9(shift.average) << " <= " << fixed9(shift.bound)
          << (shift.passed ? "  PASS" : "  FAIL") << '\n';
      if (!audit_out.empty()) {
        write_report(audit_out,
                     {{audit_in, "grid_refine_audit", gap.grid_opt,
                       audit_deterministic ? 0.0 : gap_ms,
                       {{"discrete_opt", exact.cost},
                        {"gap", gap.gap},
                        {"step", step},
                        {"grid_points", static_cast<double>(gap.grid_points)},
                        {"passed", gap_ok ? 1.0 : 0.0}}},
                      {audit_in, "shift_average_audit", shift.average,
                       audit_deterministic ? 0.0 : shift_ms,
                       {{"m", static_cast<double>(audit_m)},
                        {"opt", exact.cost},
                        {"minimum", shift.minimum},
                        {"bound", shift.bound},
                        {"margin", shift.margin},
                        {"passed", shift.passed ? 1.0 : 0.0}}}});
      }
      return kExitOk;
    }

    if (render_cmd->parsed()) {
      const auto loaded = read_instance(render_in);
      std::optional<SolutionFile> solution;
      if (!render_solution.empty()) solution = read_solution(render_solution);
      std::ofstream svg(render_svg_path, std::ios::binary);
      if (!svg) throw std::runtime_error("cannot write " + render_svg_path);
      svg << render_svg(loaded.instance, solution);
      return kExitOk;
    }
  } catch (const Failure& f) {
    err << "kmmtc: error[" << f.code << "]: " << f.message << '\n';
    return f.exit_code;
  } catch (const ParseError& e) {
    err << "kmmtc: error[E_PARSE]: " << e.what();
    if (!e.field.empty()) err << " (field \"" << e.field << "\")";
    if (e.line > 0) err << " (line " << e.line << ")";
    err << '\n';
    return kExitUsage;
  } catch (const Infeasible& e) {
    err << "kmmtc: error[E_INFEASIBLE]: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "kmmtc: error[E_INVALID]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "kmmtc: error[E_IO]: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kmmtc::cli
