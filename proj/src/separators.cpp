#include "dmwc/separators.hpp"

#include <map>
#include <stdexcept>

namespace dmwc {

namespace {

VertexMask merged(const VertexMask& removed, const VertexSet& extra, std::size_t n) {
  VertexMask m = removed.empty() ? VertexMask(n, 0) : removed;
  for (Vertex v : extra) m[v] = 1;
  return m;
}

bool admissible(const Digraph& g, const VertexMask& removed, const VertexSet& x,
                const VertexSet& y, const VertexSet& s) {
  for (Vertex v : s)
    if (g.is_infinite(v) || x.contains(v) || y.contains(v) || (!removed.empty() && removed[v]))
      return false;
  return true;
}

bool hits(const VertexMask& reach, const VertexSet& y) {
  for (Vertex v : y)
    if (reach[v]) return true;
  return false;
}

bool separates(const Digraph& g, const VertexMask& removed, const VertexSet& x,
               const VertexSet& y, const VertexSet& s) {
  return !hits(reach_mask(g, x.members(), merged(removed, s, g.vertex_count())), y);
}

bool important_in(const Digraph& g, const VertexMask& removed, const VertexSet& x,
                  const VertexSet& y, const VertexSet& s) {
  if (!admissible(g, removed, x, y, s)) return false;
  VertexMask reach = reach_mask(g, x.members(), merged(removed, s, g.vertex_count()));
  if (hits(reach, y)) return false;
  auto cut = min_vertex_separator(g, removed, VertexSet::from_mask(reach), y, s.size());
  if (std::holds_alternative<Infeasible>(cut)) return false;
  const auto& best = std::get<MinSeparator>(cut);
  return best.size == s.size() && best.members == s;
}

// Branching of the important-separator enumeration. `bound` is the parent's
// value of 2p - lambda; every recursive call must strictly decrease it.
void branch(const Digraph& g, const VertexMask& removed, const VertexSet& x, const VertexSet& y,
            std::size_t p, const VertexSet& prefix, long bound, std::vector<VertexSet>& out) {
  auto cut = min_vertex_separator(g, removed, x, y, p);
  if (std::holds_alternative<Infeasible>(cut)) return;
  const auto& star = std::get<MinSeparator>(cut);
  const long measure = 2 * static_cast<long>(p) - static_cast<long>(star.size);
  if (measure >= bound) throw std::logic_error("important separator recursion did not progress");
  if (star.size == 0) {
    out.push_back(prefix);
    return;
  }
  const std::size_t n = g.vertex_count();
  const Vertex pivot = star.members.front();

  VertexMask without_pivot = merged(removed, {pivot}, n);
  VertexSet with_pivot = prefix;
  with_pivot.insert(pivot);
  branch(g, without_pivot, x, y, p - 1, with_pivot, measure, out);

  VertexMask pushed = reach_mask(g, x.members(), merged(removed, star.members, n));
  pushed[pivot] = 1;
  branch(g, removed, VertexSet::from_mask(pushed), y, p, prefix, measure, out);
}

}  // namespace

bool is_separator(const Digraph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s) {
  check_vertices(g, x, "separator source");
  check_vertices(g, y, "separator target");
  check_vertices(g, s, "separator");
  return disjoint(x, y) && admissible(g, {}, x, y, s) && separates(g, {}, x, y, s);
}

bool is_minimal_separator(const Digraph& g, const VertexSet& x, const VertexSet& y,
                          const VertexSet& s) {
  if (!is_separator(g, x, y, s)) return false;
  for (Vertex w : s) {
    VertexSet rest = s;
    rest.erase(w);
    if (separates(g, {}, x, y, rest)) return false;
  }
  return true;
}

bool is_important(const Digraph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s) {
  check_vertices(g, x, "separator source");
  check_vertices(g, y, "separator target");
  check_vertices(g, s, "separator");
  if (!disjoint(x, y)) return false;
  return important_in(g, {}, x, y, s);
}

std::vector<Separator> enumerate_important(const Digraph& g, const VertexSet& x,
                                           const VertexSet& y, std::size_t p) {
  return enumerate_important(g, VertexMask{}, x, y, p);
}

std::vector<Separator> enumerate_important(const Digraph& g, const VertexMask& removed,
                                           const VertexSet& x, const VertexSet& y, std::size_t p) {
  std::vector<VertexSet> raw;
  branch(g, removed, x, y, p, {}, 2 * static_cast<long>(p) + 1, raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<Separator> result;
  for (auto& s : raw)
    if (important_in(g, removed, x, y, s)) result.push_back({std::move(s), x, y});
  return result;
}

ImportantCollection build_collection(const Instance& inst) {
  const Digraph& g = inst.graph;
  std::map<VertexSet, CollectionEntry> by_members;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (inst.terminals.contains(v)) continue;
    for (auto& sep : enumerate_important(g, {v}, inst.terminals, inst.budget)) {
      auto [it, fresh] = by_members.try_emplace(sep.members);
      if (fresh) it->second.separator = std::move(sep);
      it->second.witnesses.push_back(v);
    }
  }
  ImportantCollection collection;
  collection.entries.reserve(by_members.size());
  for (auto& [members, entry] : by_members) collection.entries.push_back(std::move(entry));
  return collection;
}

}  // namespace dmwc
