#include "dmwc/shadows.hpp"

#include <stdexcept>

namespace dmwc {

namespace {

Direction flip(Direction d) {
  return d == Direction::forward ? Direction::backward : Direction::forward;
}

struct Side {
  VertexSet shadow;
  VertexSet exact;
};

// Reverse shadow when `toward` is backward (vertices that cannot reach T),
// forward shadow when it is forward (vertices T cannot reach).
Side one_side(const Digraph& g, const VertexSet& t, const VertexSet& s, Direction toward,
              bool want_exact) {
  const std::size_t n = g.vertex_count();
  VertexMask blocked = s.to_mask(n);
  VertexMask lit = reach_mask(g, t.members(), blocked, toward);

  std::vector<Vertex> dark;
  for (Vertex v = 0; v < n; ++v)
    if (!lit[v] && !blocked[v] && !t.contains(v)) dark.push_back(v);
  Side side{VertexSet(dark), {}};
  if (!want_exact || dark.empty()) return side;

  // w is useful when it still connects to T after the rest of S is deleted.
  std::vector<char> useful(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    blocked[s[i]] = 0;
    useful[i] = reach_mask(g, t.members(), blocked, toward)[s[i]];
    blocked[s[i]] = 1;
  }
  bool all_useful = std::all_of(useful.begin(), useful.end(), [](char c) { return c != 0; });
  if (!all_useful) return side;

  const Direction away = flip(toward);
  std::vector<Vertex> exact;
  for (Vertex v : dark) {
    Vertex src[] = {v};
    VertexMask from_v = reach_mask(g, src, blocked, away);
    bool minimal = true;
    for (Vertex w : s) {
      auto feeders = away == Direction::forward ? g.in(w) : g.out(w);
      bool touched = std::any_of(feeders.begin(), feeders.end(), [&](Vertex u) { return from_v[u]; });
      if (!touched) {
        minimal = false;
        break;
      }
    }
    if (minimal) exact.push_back(v);
  }
  side.exact = VertexSet(std::move(exact));
  return side;
}

void check_shadow_args(const Digraph& g, const VertexSet& t, const VertexSet& s) {
  check_vertices(g, t, "terminal");
  check_vertices(g, s, "shadow set");
  if (!disjoint(s, t)) throw std::invalid_argument("shadow set intersects the terminals");
  for (Vertex v : s)
    if (g.is_infinite(v))
      throw std::invalid_argument("shadow set contains distinguished vertex " + std::to_string(v));
}

}  // namespace

ShadowReport shadow(const Digraph& g, const VertexSet& t, const VertexSet& s) {
  check_shadow_args(g, t, s);
  Side rev = one_side(g, t, s, Direction::backward, true);
  Side fwd = one_side(g, t, s, Direction::forward, true);
  return {std::move(fwd.shadow), std::move(rev.shadow), std::move(fwd.exact), std::move(rev.exact)};
}

VertexSet exact_reverse_shadow(const Digraph& g, const VertexSet& t, const VertexSet& s) {
  check_shadow_args(g, t, s);
  return one_side(g, t, s, Direction::backward, true).exact;
}

bool is_thin(const Digraph& g, const VertexSet& t, const VertexSet& s) {
  check_shadow_args(g, t, s);
  VertexMask blocked = s.to_mask(g.vertex_count());
  for (Vertex v : s) {
    blocked[v] = 0;
    bool reaches = reach_mask(g, t.members(), blocked, Direction::backward)[v];
    blocked[v] = 1;
    if (!reaches) return false;
  }
  return true;
}

bool is_shadowless(const Digraph& g, const VertexSet& t, const VertexSet& s) {
  check_shadow_args(g, t, s);
  return one_side(g, t, s, Direction::backward, false).shadow.empty() &&
         one_side(g, t, s, Direction::forward, false).shadow.empty();
}

}  // namespace dmwc
