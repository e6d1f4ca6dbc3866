#include "dmwc/undirected.hpp"

#include <set>
#include <stdexcept>

#include "dmwc/oracles.hpp"
#include "dmwc/separators.hpp"

namespace dmwc {

Digraph underlying_undirected(const Digraph& g) {
  std::set<Edge> present(g.edges().begin(), g.edges().end());
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : g.edges()) {
    Edge back{e.to, e.from};
    if (present.insert(back).second) edges.push_back(back);
  }
  return Digraph(g.vertex_count(), std::move(edges), g.infinite_vertices());
}

bool is_symmetric(const Digraph& g) {
  std::set<Edge> present(g.edges().begin(), g.edges().end());
  for (const Edge& e : g.edges())
    if (!present.contains({e.to, e.from})) return false;
  return true;
}

namespace {

class Brancher {
 public:
  explicit Brancher(const Instance& inst) : inst_(inst) {}

  std::optional<VertexSet> run(const VertexMask& removed, std::size_t budget) const {
    const Digraph& g = inst_.graph;
    for (Vertex t : inst_.terminals) {
      Vertex src[] = {t};
      VertexMask comp = reach_mask(g, src, removed);
      bool connected = std::any_of(inst_.terminals.begin(), inst_.terminals.end(),
                                   [&](Vertex o) { return o != t && comp[o]; });
      if (!connected) continue;
      if (budget == 0) return std::nullopt;

      VertexSet others = inst_.terminals;
      others.erase(t);
      for (const Separator& sep : enumerate_important(g, removed, {t}, others, budget)) {
        VertexMask next = removed;
        for (Vertex v : sep.members) next[v] = 1;
        if (auto rest = run(next, budget - sep.members.size()))
          return set_union(sep.members, *rest);
      }
      return std::nullopt;
    }
    return VertexSet{};
  }

 private:
  const Instance& inst_;
};

}  // namespace

std::optional<VertexSet> solve_undirected(const Instance& inst, const UndirectedOptions& options) {
  if (!is_symmetric(inst.graph))
    throw std::invalid_argument("solve_undirected requires a symmetric graph");
  if (options.exhaustive) return brute_force_mwc(inst);
  return Brancher(inst).run(VertexMask(inst.graph.vertex_count(), 0), inst.budget);
}

}  // namespace dmwc
