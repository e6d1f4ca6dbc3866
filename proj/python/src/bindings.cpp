#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmwc/generate.hpp"
#include "dmwc/instance_io.hpp"
#include "dmwc/oracles.hpp"
#include "dmwc/pipeline.hpp"
#include "dmwc/sampling.hpp"
#include "dmwc/separators.hpp"
#include "dmwc/shadows.hpp"
#include "dmwc/torso.hpp"

namespace py = pybind11;
using namespace dmwc;

// VertexSet crosses the boundary as a sorted list of ints; any iterable of
// ints is accepted on the way in.
namespace pybind11::detail {
template <>
struct type_caster<VertexSet> {
  PYBIND11_TYPE_CASTER(VertexSet, const_name("list[int]"));

  bool load(handle src, bool convert) {
    list_caster<std::vector<Vertex>, Vertex> inner;
    if (py::isinstance<py::set>(src) || py::isinstance<py::frozenset>(src)) {
      std::vector<Vertex> members;
      for (handle item : src) members.push_back(item.cast<Vertex>());
      value = VertexSet(std::move(members));
      return true;
    }
    if (!inner.load(src, convert)) return false;
    value = VertexSet(static_cast<std::vector<Vertex>&>(inner));
    return true;
  }

  static handle cast(const VertexSet& s, return_value_policy policy, handle parent) {
    return list_caster<std::vector<Vertex>, Vertex>::cast(s.members(), policy, parent);
  }
};
}  // namespace pybind11::detail

namespace {

SolveOptions options(const std::string& mode, std::uint64_t seed, unsigned threads) {
  SolveOptions o;
  if (mode == "deterministic") o.mode = SamplingMode::deterministic;
  else if (mode == "randomized") o.mode = SamplingMode::randomized;
  else throw py::value_error("mode must be 'deterministic' or 'randomized'");
  if (threads == 0) throw py::value_error("threads must be at least 1");
  o.seed = seed;
  o.threads = threads;
  return o;
}

ProblemKind kind_from(const std::string& s) {
  if (s == "vertex") return ProblemKind::vertex;
  if (s == "edge") return ProblemKind::edge;
  if (s == "multicut2") return ProblemKind::multicut2;
  throw py::value_error("kind must be 'vertex', 'edge' or 'multicut2'");
}

std::vector<Edge> edges_from(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Directed multiway cut: separators, shadows, candidate families and solvers";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       const VertexSet& infinite) { return Digraph(n, edges_from(edges), infinite); }),
           py::arg("n"), py::arg("edges"), py::arg("infinite") = VertexSet{})
      .def_property_readonly("n", &Digraph::vertex_count)
      .def_property_readonly("edges",
                             [](const Digraph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.from, e.to);
                               return out;
                             })
      .def_property_readonly("infinite", &Digraph::infinite_vertices)
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edges().size()) + ")";
      });

  py::class_<Instance>(m, "Instance")
      .def(py::init<Digraph, VertexSet, std::size_t>(), py::arg("graph"), py::arg("terminals"),
           py::arg("budget"))
      .def_readonly("graph", &Instance::graph)
      .def_readonly("terminals", &Instance::terminals)
      .def_readonly("budget", &Instance::budget);

  py::class_<PairCheck>(m, "PairCheck")
      .def_readonly("source", &PairCheck::from)
      .def_readonly("target", &PairCheck::to)
      .def_readonly("separated", &PairCheck::separated);

  py::class_<Solution>(m, "Solution")
      .def_readonly("vertices", &Solution::vertices)
      .def_readonly("edges", &Solution::edges)
      .def_readonly("certificate", &Solution::certificate);

  py::class_<SolveStats>(m, "SolveStats")
      .def_readonly("outer_candidates", &SolveStats::outer_candidates)
      .def_readonly("inner_candidates", &SolveStats::inner_candidates)
      .def_readonly("reduced_instances", &SolveStats::reduced_instances);

  m.def(
      "solve",
      [](const Instance& inst, const std::string& mode, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return solve_vertex(inst, options(mode, seed, threads));
      },
      py::arg("instance"), py::arg("mode") = "deterministic", py::arg("seed") = 0,
      py::arg("threads") = 1, "Vertex multiway cut of size <= budget, or None.");
  m.def(
      "solve_with_stats",
      [](const Instance& inst, const std::string& mode, std::uint64_t seed, unsigned threads) {
        SolveStats stats;
        std::optional<Solution> s;
        {
          py::gil_scoped_release release;
          s = solve_vertex(inst, options(mode, seed, threads), &stats);
        }
        return std::make_pair(s, stats);
      },
      py::arg("instance"), py::arg("mode") = "deterministic", py::arg("seed") = 0,
      py::arg("threads") = 1);
  m.def(
      "solve_edge",
      [](const Instance& inst, const std::string& mode, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return solve_edge(inst, options(mode, seed, threads));
      },
      py::arg("instance"), py::arg("mode") = "deterministic", py::arg("seed") = 0,
      py::arg("threads") = 1, "Edge multiway cut; the solution lists edge indices.");
  m.def(
      "solve_multicut_k2",
      [](const Digraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs, std::size_t p,
         const std::string& mode, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return solve_multicut_k2(g, pairs, p, options(mode, seed, threads));
      },
      py::arg("graph"), py::arg("pairs"), py::arg("budget"), py::arg("mode") = "deterministic",
      py::arg("seed") = 0, py::arg("threads") = 1);
  m.def(
      "minimum_budget",
      [](const Instance& inst, const std::string& mode, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return minimum_budget(inst, options(mode, seed, threads));
      },
      py::arg("instance"), py::arg("mode") = "deterministic", py::arg("seed") = 0,
      py::arg("threads") = 1);

  m.def("verify_solution", &verify_solution, py::arg("instance"), py::arg("cut"));
  m.def("verify_edge_solution", &verify_edge_solution, py::arg("instance"), py::arg("edges"));
  m.def("verify_multicut", &verify_multicut, py::arg("graph"), py::arg("pairs"), py::arg("budget"),
        py::arg("cut"));

  m.def(
      "important_separators",
      [](const Digraph& g, const VertexSet& x, const VertexSet& y, std::size_t p) {
        std::vector<VertexSet> out;
        for (const Separator& s : enumerate_important(g, x, y, p)) out.push_back(s.members);
        return out;
      },
      py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("budget"));
  m.def(
      "important_collection",
      [](const Instance& inst) {
        std::vector<std::pair<VertexSet, VertexSet>> out;
        ImportantCollection c = build_collection(inst);
        for (const auto& e : c.entries) out.emplace_back(e.separator.members, e.witnesses);
        return out;
      },
      py::arg("instance"), "List of (separator, witnesses) pairs.");
  m.def("is_important", &is_important, py::arg("graph"), py::arg("source"), py::arg("target"),
        py::arg("set"));

  m.def(
      "shadow",
      [](const Digraph& g, const VertexSet& t, const VertexSet& s) {
        ShadowReport r = shadow(g, t, s);
        py::dict d;
        d["forward"] = r.forward;
        d["reverse"] = r.reverse;
        d["exact_forward"] = r.exact_forward;
        d["exact_reverse"] = r.exact_reverse;
        return d;
      },
      py::arg("graph"), py::arg("terminals"), py::arg("set"));
  m.def("is_thin", &is_thin, py::arg("graph"), py::arg("terminals"), py::arg("set"));
  m.def("is_shadowless", &is_shadowless, py::arg("graph"), py::arg("terminals"), py::arg("set"));

  m.def("random_set", &random_set, py::arg("instance"), py::arg("seed"));
  m.def(
      "deterministic_sets",
      [](const Instance& inst, std::size_t exhaustive_limit) {
        return deterministic_sets(inst, exhaustive_limit).candidates;
      },
      py::arg("instance"), py::arg("exhaustive_limit") = kExhaustiveUniverse);

  m.def(
      "torso",
      [](const Digraph& g, const VertexSet& keep) {
        Relabeled r = torso(g, keep);
        return std::make_pair(r.graph, r.to_original);
      },
      py::arg("graph"), py::arg("keep"),
      "Returns (graph, to_original); vertex i of the torso is to_original[i].");

  m.def("brute_force_mwc", &brute_force_mwc, py::arg("instance"),
        py::arg("cap") = kDefaultOracleCap);

  m.def(
      "generate",
      [](std::uint64_t seed, std::size_t n, double density, std::size_t terminals,
         std::size_t budget, double inf_fraction) {
        return generate_instance({seed, n, density, terminals, budget, inf_fraction});
      },
      py::arg("seed") = 0, py::arg("n") = 8, py::arg("density") = 0.25, py::arg("terminals") = 2,
      py::arg("budget") = 2, py::arg("inf_fraction") = 0.0);
  m.def("fixture", &fixture, py::arg("name"), py::arg("budget"));

  m.def(
      "parse_instance",
      [](const std::string& text) {
        InstanceFile f = parse_instance_string(text);
        py::dict d;
        d["kind"] = to_string(f.kind);
        d["graph"] = f.graph;
        d["terminals"] = f.terminals;
        d["pairs"] = f.pairs;
        d["budget"] = f.budget;
        if (f.kind != ProblemKind::multicut2) d["instance"] = f.instance();
        return d;
      },
      py::arg("text"), "Parse the text format into a dict; ParseError carries line:column.");
  m.def(
      "serialize",
      [](const Instance& inst, const std::string& kind) {
        return serialize(InstanceFile::from_instance(inst, kind_from(kind)));
      },
      py::arg("instance"), py::arg("kind") = "vertex");
  m.def(
      "serialize_multicut",
      [](const Digraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs, std::size_t p) {
        InstanceFile f;
        f.kind = ProblemKind::multicut2;
        f.graph = g;
        f.pairs = pairs;
        f.budget = p;
        return serialize(f);
      },
      py::arg("graph"), py::arg("pairs"), py::arg("budget"));
}
