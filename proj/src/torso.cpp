#include "dmwc/torso.hpp"

#include <stdexcept>

namespace dmwc {

VertexSet Relabeled::lift(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to_original.at(v));
  return VertexSet(std::move(out));
}

VertexSet Relabeled::lower(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) {
    if (v >= from_original.size() || !from_original[v])
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not kept by the relabeling");
    out.push_back(*from_original[v]);
  }
  return VertexSet(std::move(out));
}

Relabeled torso(const Digraph& g, const VertexSet& c) {
  check_vertices(g, c, "torso vertex");
  const std::size_t n = g.vertex_count();
  Relabeled r;
  r.from_original.assign(n, std::nullopt);
  for (Vertex v : c) {
    r.from_original[v] = static_cast<Vertex>(r.to_original.size());
    r.to_original.push_back(v);
  }
  VertexMask kept = c.to_mask(n);

  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  for (Vertex a : c) {
    // Walk from a through dropped vertices only; kept vertices are endpoints.
    VertexMask seen(n, 0);
    std::vector<Vertex> heads;
    stack.assign(g.out(a).begin(), g.out(a).end());
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      if (seen[u]) continue;
      seen[u] = 1;
      if (kept[u]) {
        if (u != a) heads.push_back(*r.from_original[u]);
        continue;
      }
      for (Vertex w : g.out(u))
        if (!seen[w]) stack.push_back(w);
    }
    std::sort(heads.begin(), heads.end());
    for (Vertex b : heads) edges.push_back({*r.from_original[a], b});
  }

  std::vector<Vertex> infinite;
  for (Vertex v : g.infinite_vertices())
    if (kept[v]) infinite.push_back(*r.from_original[v]);
  r.graph = Digraph(c.size(), std::move(edges), VertexSet(std::move(infinite)));
  return r;
}

ReducedInstance reduce_instance(const Instance& inst, const VertexSet& z) {
  check_vertices(inst.graph, z, "reduction set");
  if (!disjoint(z, inst.terminals))
    throw std::invalid_argument("reduction set must avoid the terminals");
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v)
    if (!z.contains(v)) keep.push_back(v);
  Relabeled map = torso(inst.graph, VertexSet(std::move(keep)));
  Instance reduced(map.graph, map.lower(inst.terminals), inst.budget);
  return {std::move(reduced), std::move(map)};
}

}  // namespace dmwc
