#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>

#include "lscat/canonical.hpp"
#include "lscat/category.hpp"
#include "lscat/census.hpp"
#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/curvature.hpp"
#include "lscat/fixtures.hpp"
#include "lscat/graph.hpp"
#include "lscat/homotopy.hpp"
#include "lscat/io.hpp"
#include "lscat/morse.hpp"
#include "lscat/report.hpp"

namespace py = pybind11;
using namespace lscat;

namespace {

py::dict bracket_dict(const CategoryBracket& b) {
  py::dict d;
  d["lower"] = b.lower;
  d["upper"] = b.upper;
  d["lower_method"] = b.lower_method;
  d["upper_method"] = b.upper_method;
  d["exact"] = b.tight();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homotopy, Morse and Lusternik-Schnirelmann invariants of finite simple graphs";
  m.attr("__version__") = kVersion;

  py::register_exception<GraphError>(m, "GraphError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("order"),
           py::arg("edges"))
      .def(py::init([](const std::vector<int>& ids,
                       const std::vector<std::pair<int, int>>& edges) {
             return SimpleGraph(ids, edges);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_any(text); },
                  "Parse graph6, JSON or edge-list text")
      .def_property_readonly("order", &SimpleGraph::order)
      .def_property_readonly("size", &SimpleGraph::size)
      .def("vertices", &SimpleGraph::vertices)
      .def("edges", &SimpleGraph::edges)
      .def("adjacent", &SimpleGraph::adjacent)
      .def("graph6", [](const SimpleGraph& g) { return serialize_graph6(g); })
      .def("edge_list", [](const SimpleGraph& g) { return serialize_edge_list(g); })
      .def("json", [](const SimpleGraph& g) { return serialize_graph_json(g); })
      .def("certificate", [](const SimpleGraph& g) { return canonical_certificate(g); })
      .def("__eq__",
           [](const SimpleGraph& a, const SimpleGraph& b) {
             return canonical_certificate(a) == canonical_certificate(b);
           })
      .def("__repr__", [](const SimpleGraph& g) {
        std::ostringstream os;
        os << "Graph(order=" << g.order() << ", size=" << g.size() << ")";
        return os.str();
      });

  m.def("fixture", [](const std::string& name) { return fixture(name).graph; }, py::arg("name"));
  m.def("fixture_names", &fixture_names);

  m.def("f_vector", [](const SimpleGraph& g) { return CliqueComplex(g).f_vector(); });
  m.def("euler_characteristic",
        [](const SimpleGraph& g) { return euler_characteristic(g); });
  m.def("betti_numbers", [](const SimpleGraph& g) {
    std::vector<int> b = betti_numbers(g);
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
  });

  m.def("is_contractible", &is_contractible);
  m.def("reduce", [](const SimpleGraph& g) {
    Reduction r = reduce(g);
    py::dict d;
    d["core"] = r.core;
    d["moves"] = r.cert.moves.size();
    return d;
  });

  m.def(
      "cup_length",
      [](const SimpleGraph& g, std::uint64_t seed) {
        CupOptions opt;
        opt.seed = seed;
        CupResult r = cup_length(g, opt);
        py::dict d;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["lower_method"] = r.lower_method;
        d["upper_method"] = r.upper_method;
        d["exact"] = r.tight();
        return d;
      },
      py::arg("g"), py::arg("seed") = 0);

  m.def(
      "crit",
      [](const SimpleGraph& g, int dp_limit, bool heuristic, std::uint64_t seed) {
        CritResult r = heuristic ? crit_heuristic(g, seed) : crit_exact(g, dp_limit);
        py::dict d;
        d["value"] = r.value;
        d["exact"] = r.exact;
        d["method"] = r.method;
        d["ordering"] = r.witness;
        return d;
      },
      py::arg("g"), py::arg("dp_limit") = 22, py::arg("heuristic") = false, py::arg("seed") = 0);

  m.def(
      "tcat",
      [](const SimpleGraph& g, int dp_limit) {
        TcatOptions opt;
        opt.dp_limit = dp_limit;
        return bracket_dict(tcat_bracket(g, opt));
      },
      py::arg("g"), py::arg("dp_limit") = 22);
  m.def("cat", [](const SimpleGraph& g) { return bracket_dict(cat_bracket(g)); });
  m.def("cri", [](const SimpleGraph& g) { return bracket_dict(cri_bracket(g)); });

  m.def(
      "homotopic",
      [](const SimpleGraph& a, const SimpleGraph& b, int extra, std::size_t states) {
        HomotopyBudget budget{extra, states};
        HomotopyResult r = homotopic_bounded(a, b, budget);
        switch (r.answer) {
          case HomotopyAnswer::Equivalent: return std::string("equivalent");
          case HomotopyAnswer::Distinct: return std::string("distinct");
          default: return std::string("unknown");
        }
      },
      py::arg("a"), py::arg("b"), py::arg("extra_vertices") = 2,
      py::arg("max_states") = std::size_t{1000000});

  m.def(
      "index_profile",
      [](const SimpleGraph& g, const std::vector<int>& ordering) {
        IndexProfile p = index_profile(g, ordering);
        py::list entries;
        for (const VertexIndexEntry& e : p.entries) {
          py::dict d;
          d["vertex"] = e.vertex;
          d["index"] = e.index;
          d["critical"] = e.critical;
          d["sublevel_chi"] = e.sublevel_chi;
          entries.append(std::move(d));
        }
        py::dict d;
        d["entries"] = std::move(entries);
        d["chi"] = p.chi;
        d["prefix_sums_match"] = p.prefix_sums_match;
        return d;
      },
      py::arg("g"), py::arg("ordering"));
  m.def("random_ordering", &random_ordering, py::arg("g"), py::arg("seed") = 0);

  m.def(
      "curvature",
      [](const SimpleGraph& g, const std::string& which, std::uint64_t seed) {
        CurvatureReport rep;
        if (which == "euler")
          rep = euler_curvature(g, 16, 20000, seed);
        else if (which.rfind("betti:", 0) == 0)
          rep = betti_curvature(g, std::stoi(which.substr(6)), 8, 2000, seed);
        else if (which == "category")
          rep = category_curvature(g, default_category_evaluator(), 12, 500, seed);
        else
          throw ParseError("which must be euler, betti:K or category");
        py::list entries;
        for (const VertexCurvature& e : rep.entries) {
          py::dict d;
          d["vertex"] = e.vertex;
          d["lower"] = rational_str(e.lower);
          d["upper"] = rational_str(e.upper);
          d["value"] = e.lower.get_d();
          entries.append(std::move(d));
        }
        py::dict d;
        d["kind"] = rep.kind;
        d["tag"] = rep.tag == CurvatureTag::Exact      ? "exact"
                   : rep.tag == CurvatureTag::Bracket ? "bracket"
                                                       : "monte-carlo";
        d["entries"] = std::move(entries);
        d["total_lower"] = rational_str(rep.total_lower);
        d["total_upper"] = rational_str(rep.total_upper);
        return d;
      },
      py::arg("g"), py::arg("which") = "euler", py::arg("seed") = 0);

  m.def(
      "invariant_report_json",
      [](const SimpleGraph& g, const std::string& source) {
        return report_to_json(invariant_report(g, source));
      },
      py::arg("g"), py::arg("source") = "python");

  m.def(
      "census_json",
      [](int order, unsigned threads) {
        CensusOptions opt;
        opt.order = order;
        opt.threads = threads;
        return census_to_json(census(opt));
      },
      py::arg("order"), py::arg("threads") = 0);
}
