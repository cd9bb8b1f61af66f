#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "switchgraph/binary_matrix.hpp"
#include "switchgraph/error.hpp"
#include "switchgraph/graph.hpp"
#include "switchgraph/optimize.hpp"
#include "switchgraph/oracle.hpp"
#include "switchgraph/reach.hpp"

namespace py = pybind11;
using namespace switchgraph;

namespace {

py::dict class_dict(const MatrixClass& c) {
  py::dict d;
  d["nested"] = c.nested;
  d["anti_nested"] = c.anti_nested;
  d["zebra"] = c.zebra;
  d["zebra_split_h"] = c.zebra_split_h;
  d["zebra_split_v"] = c.zebra_split_v;
  d["anti_zebra"] = c.anti_zebra;
  d["anti_zebra_split_h"] = c.anti_zebra_split_h;
  d["anti_zebra_split_v"] = c.anti_zebra_split_v;
  d["complement_of_split"] = c.complement_of_split_zebra_or_antizebra;
  d["degenerate_split"] = c.degenerate_split;
  return d;
}

py::list path_list(const std::vector<SwitchCoord>& path) {
  py::list out;
  for (const auto& c : path) out.append(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_switchgraph, m) {
  m.doc() = "Core bindings; all indices are 0-based.";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::enum_<Sign>(m, "Sign").value("positive", Sign::positive).value("negative", Sign::negative);

  py::class_<SwitchCoord>(m, "SwitchCoord")
      .def(py::init(&SwitchCoord::make), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("l"))
      .def_readonly("i", &SwitchCoord::i)
      .def_readonly("j", &SwitchCoord::j)
      .def_readonly("k", &SwitchCoord::k)
      .def_readonly("l", &SwitchCoord::l)
      .def("as_tuple", [](const SwitchCoord& c) { return py::make_tuple(c.i, c.j, c.k, c.l); })
      .def("__eq__", [](const SwitchCoord& a, const SwitchCoord& b) { return a == b; })
      .def("__repr__", [](const SwitchCoord& c) {
        return "SwitchCoord(" + std::to_string(c.i) + ", " + std::to_string(c.j) + ", " +
               std::to_string(c.k) + ", " + std::to_string(c.l) + ")";
      });

  py::class_<BinaryMatrix>(m, "BinaryMatrix")
      .def(py::init(&BinaryMatrix::from_rows), py::arg("rows"))
      .def_property_readonly("rows", &BinaryMatrix::rows)
      .def_property_readonly("cols", &BinaryMatrix::cols)
      .def_property_readonly("row_sums",
                             [](const BinaryMatrix& a) {
                               return std::vector<int>(a.row_sums().begin(), a.row_sums().end());
                             })
      .def_property_readonly("col_sums",
                             [](const BinaryMatrix& a) {
                               return std::vector<int>(a.col_sums().begin(), a.col_sums().end());
                             })
      .def("key", &BinaryMatrix::key)
      .def("to_rows", &BinaryMatrix::to_rows)
      .def("__getitem__",
           [](const BinaryMatrix& a, std::pair<std::size_t, std::size_t> rc) {
             return static_cast<int>(a.at(rc.first, rc.second));
           })
      .def("__eq__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a == b; })
      .def("__repr__", &format_matrix);

  m.def("parse_matrix", [](const std::string& text) { return parse_matrix(text); });
  m.def("format_matrix", &format_matrix);
  m.def("find_checkerboards", [](const BinaryMatrix& a, std::optional<Sign> sign) {
    py::list out;
    for (const auto& cb : find_checkerboards(a, sign)) out.append(py::make_tuple(cb.coord, cb.sign));
    return out;
  }, py::arg("a"), py::arg("sign") = std::nullopt);
  m.def("apply_switch", &apply_switch, py::arg("a"), py::arg("coord"), py::arg("direction"));
  m.def("potential", &potential);
  m.def("classify", [](const BinaryMatrix& a) { return class_dict(classify(a)); });

  m.def("compute_T", [](const BinaryMatrix& a, const BinaryMatrix& b) {
    return compute_T(diff(a, b)).coeffs.to_rows();
  });
  m.def("check_conditions", [](const BinaryMatrix& a, const BinaryMatrix& b) {
    const ConditionReport r = check_conditions(diff(a, b));
    py::dict d;
    d["i"] = r.cond_i;
    d["ii"] = r.cond_ii;
    d["iii"] = r.cond_iii;
    d["T"] = r.t.coeffs.to_rows();
    return d;
  });
  m.def(
      "build_path",
      [](const BinaryMatrix& a, const BinaryMatrix& b, std::size_t max_states, bool heuristic) {
        const ReachVerdict v = build_path(a, b, {max_states, heuristic});
        py::dict d;
        d["status"] = std::string(to_string(v.status));
        d["path"] = v.path ? py::object(path_list(*v.path)) : py::object(py::none());
        return d;
      },
      py::arg("a"), py::arg("a_prime"), py::arg("max_states") = ReachOptions{}.max_states,
      py::arg("use_heuristic") = true);

  py::class_<Graph>(m, "Graph")
      .def(py::init<BinaryMatrix>(), py::arg("adjacency"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("adjacency", &Graph::adjacency)
      .def_property_readonly("degrees",
                             [](const Graph& g) {
                               return std::vector<int>(g.degrees().begin(), g.degrees().end());
                             })
      .def("degree_sorted", &Graph::degree_sorted);

  m.def("sort_by_degree", &sort_by_degree);
  m.def("analyze_graph", [](const Graph& g) {
    const SpectralReport r = spectral_radius(g);
    py::dict d;
    d["lambda1"] = r.lambda1;
    d["M1"] = r.M1;
    d["M2"] = r.M2;
    d["Z1"] = r.Z1;
    d["Z2"] = r.Z2;
    d["r"] = r.r;
    d["converged"] = r.converged;
    return d;
  });
  m.def("gen_erdos_renyi", &gen_erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("gen_small_world", &gen_small_world, py::arg("side"), py::arg("rewire_frac"),
        py::arg("seed"));
  m.def("gen_split_zebra", &gen_split_zebra, py::arg("row_sums"), py::arg("col_sums"));

  m.def(
      "optimize",
      [](const Graph& g, std::size_t budget, std::size_t lambda_every, std::uint64_t seed) {
        RunOptions opt;
        opt.budget = budget;
        opt.lambda_every = lambda_every;
        opt.seed = seed;
        Trajectory t;
        {
          py::gil_scoped_release release;
          t = run(g, opt);
        }
        py::dict d;
        d["termination"] = std::string(to_string(t.termination));
        d["steps"] = t.steps.size();
        d["initial_lambda1"] = t.initial_lambda1;
        d["final_lambda1"] = t.final_lambda1;
        std::vector<std::int64_t> m2{t.initial_M2};
        for (const auto& s : t.steps) m2.push_back(s.M2);
        d["M2"] = m2;
        d["final"] = t.final_graph;
        d["csv"] = trajectory_csv(t);
        return d;
      },
      py::arg("graph"), py::arg("budget") = RunOptions{}.budget,
      py::arg("lambda_every") = RunOptions{}.lambda_every, py::arg("seed") = RunOptions{}.seed);

  m.def("enumerate_margins", &enumerate_margins, py::arg("row_sums"), py::arg("col_sums"));
  m.def("verify_class", [](const std::vector<int>& r, const std::vector<int>& c) {
    const MatrixClassDAG dag = build_dag(enumerate_margins(r, c));
    const StructureReport rep = verify_structure(dag);
    py::dict checks;
    for (const auto& chk : rep.checks) checks[py::str(chk.name)] = std::string(to_string(chk.status));
    py::dict d;
    d["count"] = dag.vertices.size();
    d["arcs"] = dag.arcs.size();
    d["sources"] = dag.sources.size();
    d["sinks"] = dag.sinks.size();
    d["checks"] = checks;
    return d;
  });
}
