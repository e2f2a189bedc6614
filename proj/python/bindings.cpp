#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kmmtc/generators.hpp"
#include "kmmtc/geometry.hpp"
#include "kmmtc/io.hpp"
#include "kmmtc/oracle.hpp"
#include "kmmtc/ptas.hpp"
#include "kmmtc/sites.hpp"
#include "kmmtc/svg.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace kmmtc;

namespace {

CapPolicy cap_from_string(const std::string& cap, int& fixed) {
  if (cap == "auto") return CapPolicy::Auto;
  if (cap == "verify") return CapPolicy::Verify;
  fixed = std::stoi(cap);
  return CapPolicy::Fixed;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "k-sink minimum movement target coverage";

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Point{x, y}; }), py::arg("x"), py::arg("y"))
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 2) throw py::value_error("Point needs (x, y)");
        return Point{t[0].cast<double>(), t[1].cast<double>()};
      }))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__iter__", [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__repr__", [](const Point& p) {
        return "Point(" + py::repr(py::float_(p.x)).cast<std::string>() + ", " +
               py::repr(py::float_(p.y)).cast<std::string>() + ")";
      });
  py::implicitly_convertible<py::tuple, Point>();

  py::class_<Instance>(m, "Instance")
      .def(py::init<>())
      .def(py::init([](std::vector<Point> targets, std::vector<Point> stations, double r) {
             Instance inst{std::move(targets), std::move(stations), r};
             validate(inst);
             return inst;
           }),
           py::arg("targets"), py::arg("stations"), py::arg("r"))
      .def_readwrite("targets", &Instance::targets)
      .def_readwrite("stations", &Instance::stations)
      .def_readwrite("r", &Instance::r)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

  py::class_<CandidateSite>(m, "CandidateSite")
      .def_readonly("position", &CandidateSite::position)
      .def_readonly("weight", &CandidateSite::weight)
      .def_readonly("origin_station", &CandidateSite::origin_station)
      .def_property_readonly("covered", [](const CandidateSite& s) { return s.covered.indices(); });

  py::class_<Placement>(m, "Placement")
      .def_readonly("position", &Placement::position)
      .def_readonly("station", &Placement::station)
      .def_readonly("weight", &Placement::weight);

  py::class_<Solution>(m, "Solution")
      .def_readonly("placements", &Solution::placements)
      .def_readonly("total_cost", &Solution::total_cost)
      .def_readonly("shift_round_used", &Solution::shift_round_used)
      .def_readonly("per_round_costs", &Solution::per_round_costs)
      .def_readonly("m", &Solution::m)
      .def_readonly("cap", &Solution::cap)
      .def("to_json", [](const Solution& s) { return solution_to_json(s).dump(2); });

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("feasible", &OracleResult::feasible)
      .def_readonly("cost", &OracleResult::cost)
      .def_readonly("site_indices", &OracleResult::site_indices)
      .def_readonly("nodes_explored", &OracleResult::nodes_explored)
      .def_readonly("proven_optimal", &OracleResult::proven_optimal);

  py::class_<GapReport>(m, "GapReport")
      .def_readonly("discrete_opt", &GapReport::discrete_opt)
      .def_readonly("grid_opt", &GapReport::grid_opt)
      .def_readonly("gap", &GapReport::gap)
      .def_readonly("grid_points", &GapReport::grid_points);

  py::class_<ShiftAudit>(m, "ShiftAudit")
      .def_readonly("average", &ShiftAudit::average)
      .def_readonly("minimum", &ShiftAudit::minimum)
      .def_readonly("bound", &ShiftAudit::bound)
      .def_readonly("passed", &ShiftAudit::passed);

  py::register_exception<Infeasible>(m, "Infeasible", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("dist", &dist, py::arg("p"), py::arg("q"));
  m.def("circle_circle_intersections",
        [](const Point& c1, const Point& c2, double r) {
          return circle_circle_intersections(c1, c2, r).points;
        },
        py::arg("c1"), py::arg("c2"), py::arg("r"));
  m.def("nearest_point_on_circle", &nearest_point_on_circle, py::arg("center"), py::arg("r"),
        py::arg("source"));
  m.def("covered_targets",
        [](const Point& site, const std::vector<Point>& targets, double r) {
          return covered_targets(site, targets, r);
        },
        py::arg("site"), py::arg("targets"), py::arg("r"));
  m.def("coverage_angle_halfwidth", &coverage_angle_halfwidth, py::arg("a"), py::arg("a_prime"),
        py::arg("r"));
  m.def("s_prime_location", &s_prime_location, py::arg("a"), py::arg("r"), py::arg("delta"));

  m.def("generate_candidate_sites", &generate_candidate_sites, py::arg("instance"));
  m.def("prepare_sites", &prepare_sites, py::arg("instance"),
        "Candidate sites after dominance pruning.");

  m.def("gen_uniform",
        [](std::size_t n, std::size_t k, double r, double extent, std::uint64_t seed) {
          return gen_uniform(n, k, r, extent, seed).instance;
        },
        py::arg("n"), py::arg("k"), py::arg("r") = 1.0, py::arg("extent") = 10.0,
        py::arg("seed") = 0);
  m.def("gen_counterexample",
        [](std::size_t k, double alpha, double beta, double r) {
          return gen_counterexample(k, alpha, beta, r).instance;
        },
        py::arg("k"), py::arg("alpha") = 1.0, py::arg("beta") = 0.01, py::arg("r") = 1.0);

  m.def("solve",
        [](const Instance& instance, std::optional<int> m_param, std::optional<double> epsilon,
           const std::string& cap, int jobs) {
          PtasConfig config;
          config.m = m_param;
          config.epsilon = epsilon;
          config.cap_policy = cap_from_string(cap, config.fixed_cap);
          config.jobs = jobs;
          py::gil_scoped_release release;
          return solve(instance, config);
        },
        py::arg("instance"), py::kw_only(), py::arg("m") = py::none(),
        py::arg("epsilon") = py::none(), py::arg("cap") = "auto", py::arg("jobs") = 1);

  m.def("exact_min_cost_cover",
        [](const Instance& instance) {
          const auto sites = prepare_sites(instance);
          return exact_min_cost_cover(instance.n(), sites);
        },
        py::arg("instance"), "Exact optimum over the pruned candidate sites.");
  m.def("greedy_cover",
        [](const Instance& instance) {
          const auto sites = prepare_sites(instance);
          return greedy_cover(instance.n(), sites);
        },
        py::arg("instance"));
  m.def("grid_refine_audit", &grid_refine_audit, py::arg("instance"), py::arg("discrete_opt"),
        py::arg("step"));
  m.def("shift_average_audit",
        [](const std::vector<double>& costs, double opt) { return shift_average_audit(costs, opt); },
        py::arg("per_round_costs"), py::arg("opt"));

  m.def("read_instance", [](const std::string& path) { return read_instance(path).instance; },
        py::arg("path"));
  m.def("write_instance",
        [](const std::string& path, const Instance& instance) { write_instance(path, instance); },
        py::arg("path"), py::arg("instance"));
  m.def("render_svg", [](const Instance& instance) { return render_svg(instance); },
        py::arg("instance"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
