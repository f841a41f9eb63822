#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mogp/dataset.hpp"
#include "mogp/experiment.hpp"
#include "mogp/metrics.hpp"
#include "mogp/pareto.hpp"
#include "mogp/semantic.hpp"

namespace py = pybind11;
using namespace mogp;

namespace {

SemanticBounds make_bounds(py::object lbss, double ubss) {
  SemanticBounds b;
  if (!lbss.is_none()) b.lbss = lbss.cast<double>();
  b.ubss = ubss;
  return b;
}

}  // namespace

PYBIND11_MODULE(_mogp, m) {
  m.doc() = "Multi-objective GP engine: expression trees, Pareto machinery, "
            "semantic distances, hypervolume and rank-sum statistics";

  py::class_<Program>(m, "Program")
      .def_static("from_sexpr", &Program::from_sexpr, py::arg("text"))
      .def("to_sexpr", &Program::to_sexpr)
      .def("depth", &Program::depth)
      .def("node_count", &Program::node_count)
      .def("evaluate",
           [](const Program& p, const std::vector<double>& row) {
             return p.evaluate(row);
           },
           py::arg("row"))
      .def("__repr__", [](const Program& p) { return "Program(" + p.to_sexpr() + ")"; });

  py::class_<Dataset>(m, "Dataset")
      .def_readonly("name", &Dataset::name)
      .def_readonly("feature_count", &Dataset::feature_count)
      .def_readonly("rows", &Dataset::rows)
      .def_property_readonly("labels",
                             [](const Dataset& d) {
                               return std::vector<bool>(d.labels.begin(), d.labels.end());
                             })
      .def("__len__", &Dataset::size)
      .def("positive_count", &Dataset::positive_count);

  m.def("load_csv", &load_csv, py::arg("path"), py::arg("label_column"),
        py::arg("positive_label"));
  m.def("stratified_split",
        [](const Dataset& d, std::uint64_t seed) {
          Rng rng = make_rng(seed);
          return stratified_split(d, rng);
        },
        py::arg("dataset"), py::arg("seed"));
  m.def("objectives",
        [](const Program& p, const Dataset& d) { return objectives(p, d); },
        py::arg("program"), py::arg("dataset"));
  m.def("semantics",
        [](const Program& p, const Dataset& d) { return semantics_of(p, d); },
        py::arg("program"), py::arg("dataset"));

  m.def("dominates",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return dominates(a, b);
        },
        py::arg("a"), py::arg("b"));
  m.def("dominance_rank",
        [](const std::vector<std::vector<double>>& pop) { return dominance_rank(pop); });
  m.def("fast_nondominated_sort",
        [](const std::vector<std::vector<double>>& pop) {
          return fast_nondominated_sort(pop).fronts;
        });
  m.def("crowding_distance",
        [](const std::vector<std::vector<double>>& front) {
          return crowding_distance(front);
        });

  m.def("sdo_distance",
        [](const std::vector<double>& pivot, const std::vector<double>& v,
           py::object lbss, double ubss) {
          return sdo_distance(pivot, v, make_bounds(lbss, ubss));
        },
        py::arg("pivot"), py::arg("v"), py::arg("lbss"), py::arg("ubss"));
  m.def("psdo_distance",
        [](const std::vector<double>& pivot, const std::vector<double>& v,
           py::object lbss, double ubss) {
          return psdo_distance(pivot, v, make_bounds(lbss, ubss));
        },
        py::arg("pivot"), py::arg("v"), py::arg("lbss"), py::arg("ubss"));

  m.def("hypervolume_trapezoid",
        [](const std::vector<std::pair<double, double>>& points) {
          return hypervolume_trapezoid(make_front_snapshot(points));
        },
        py::arg("points"));
  m.def("hypervolume_staircase",
        [](const std::vector<std::pair<double, double>>& points) {
          return hypervolume_staircase(make_front_snapshot(points));
        },
        py::arg("points"));
  m.def("accumulate_po_front",
        [](const std::vector<std::vector<std::pair<double, double>>>& fronts) {
          std::vector<FrontSnapshot> snaps;
          snaps.reserve(fronts.size());
          for (const auto& f : fronts) snaps.push_back(make_front_snapshot(f));
          return accumulate_po_front(snaps).points;
        },
        py::arg("fronts"));

  m.def("wilcoxon_rank_sum", &wilcoxon_rank_sum, py::arg("a"), py::arg("b"));
  m.def("bonferroni_threshold", &bonferroni_threshold, py::arg("alpha"), py::arg("m"));

  m.def("run_config",
        [](const std::string& config_path, unsigned jobs) {
          const auto cfg = parse_config_file(config_path);
          const auto results = run_experiment(cfg, jobs);
          py::list out;
          for (const auto& r : results) {
            py::dict d;
            d["run_id"] = r.run_id;
            d["seed"] = r.seed;
            d["final_hv"] = r.final_hv;
            d["hv_trace"] = r.hv_trace;
            d["front"] = r.test_front.points;
            d["programs"] = r.front_programs;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("config_path"), py::arg("jobs") = 1,
        "Run one experiment cell from a config file; returns per-run dicts.");
  m.def("report", &report, py::arg("campaign_manifest_path"));
}
