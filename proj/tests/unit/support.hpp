#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dmwc/digraph.hpp"
#include "dmwc/generate.hpp"
#include "dmwc/rng.hpp"

namespace dmwc::test {

// Vertex ids of shadow_gadget(3, 2).
namespace gadget {
inline constexpr Vertex t1 = 0, t2 = 1;
inline constexpr Vertex a1 = 2, a2 = 3, a3 = 4;
inline constexpr Vertex b1 = 5, b2 = 6, b3 = 7;
inline constexpr Vertex c12 = 8, c13 = 9, c23 = 10;
inline const VertexSet T{t1, t2};
}  // namespace gadget

inline Instance gadget_instance(std::size_t p = 2) { return shadow_gadget(3, 2, p); }

// Random digraph with no self-loops; each vertex is distinguished with
// probability `inf`.
inline Digraph random_digraph(std::uint64_t seed, std::size_t n, double density, double inf = 0.0) {
  CounterRng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.next_double() < density) edges.push_back({u, v});
  VertexSet infinite;
  for (Vertex v = 0; v < n; ++v)
    if (rng.next_double() < inf) infinite.insert(v);
  return Digraph(n, std::move(edges), infinite);
}

inline VertexSet mask_set(std::uint64_t mask) {
  VertexSet s;
  for (Vertex v = 0; mask >> v; ++v)
    if ((mask >> v) & 1) s.insert(v);
  return s;
}

inline void for_each_subset(std::size_t n, const std::function<void(const VertexSet&)>& fn) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) fn(mask_set(m));
}

// Plain BFS written independently of the library's reachability.
inline VertexSet naive_reach(const Digraph& g, const VertexSet& from, const VertexSet& removed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex v : from)
    if (!removed.contains(v)) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges())
      if (e.from == u && !seen[e.to] && !removed.contains(e.to)) {
        seen[e.to] = 1;
        stack.push_back(e.to);
      }
  }
  return VertexSet::from_mask(seen);
}

inline bool naive_separates(const Digraph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s) {
  return disjoint(naive_reach(g, x, s), y);
}

}  // namespace dmwc::test
