#include "dmwc/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace dmwc {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

class MaskGraph {
 public:
  MaskGraph(const Digraph& g, std::size_t cap) : n_(g.vertex_count()), out_(g.vertex_count(), 0) {
    if (n_ > cap || n_ > 63)
      throw std::length_error("oracle refuses graphs with " + std::to_string(n_) +
                              " vertices (cap " + std::to_string(std::min<std::size_t>(cap, 63)) + ")");
    for (const Edge& e : g.edges()) out_[e.from] |= bit(e.to);
    for (Vertex v = 0; v < n_; ++v)
      if (!g.is_infinite(v)) finite_ |= bit(v);
  }

  Mask reach(Mask sources, Mask removed) const {
    Mask seen = sources & ~removed;
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= out_[std::countr_zero(f)];
      next &= ~removed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  Mask finite() const { return finite_; }

 private:
  std::size_t n_;
  std::vector<Mask> out_;
  Mask finite_ = 0;
};

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

VertexSet from_mask(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return VertexSet(std::move(out));
}

// Calls fn(subset) for every subset of `pool` with exactly k elements, in
// lexicographic order of the sorted member lists. Stops when fn returns true.
template <typename Fn>
bool for_each_k_subset(const std::vector<Vertex>& pool, std::size_t k, Fn&& fn) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (std::size_t i : idx) m |= bit(pool[i]);
    if (fn(m)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Vertex> members(Mask m) { return from_mask(m).members(); }

bool is_cut(const MaskGraph& mg, const std::vector<Vertex>& terminals, Mask all_t, Mask removed) {
  for (Vertex t : terminals)
    if (mg.reach(bit(t), removed) & (all_t & ~bit(t))) return false;
  return true;
}

}  // namespace

std::optional<VertexSet> brute_force_mwc(const Instance& inst, std::size_t cap) {
  MaskGraph mg(inst.graph, cap);
  const Mask all_t = to_mask(inst.terminals);
  const auto pool = members(mg.finite() & ~all_t);
  std::optional<VertexSet> found;
  for (std::size_t k = 0; k <= std::min(inst.budget, pool.size()) && !found; ++k)
    for_each_k_subset(pool, k, [&](Mask s) {
      if (!is_cut(mg, inst.terminals.members(), all_t, s)) return false;
      found = from_mask(s);
      return true;
    });
  return found;
}

std::vector<VertexSet> minimal_multiway_cuts(const Instance& inst, std::size_t max_size,
                                             std::size_t cap) {
  MaskGraph mg(inst.graph, cap);
  const Mask all_t = to_mask(inst.terminals);
  const auto pool = members(mg.finite() & ~all_t);
  std::unordered_map<Mask, bool> cut;
  std::vector<VertexSet> result;
  for (std::size_t k = 0; k <= std::min(max_size, pool.size()); ++k)
    for_each_k_subset(pool, k, [&](Mask s) {
      bool ok = is_cut(mg, inst.terminals.members(), all_t, s);
      cut[s] = ok;
      if (!ok) return false;
      for (Mask r = s; r; r &= r - 1)
        if (cut.at(s & ~(r & -r))) return false;
      result.push_back(from_mask(s));
      return false;
    });
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Separator> brute_force_important(const Digraph& g, const VertexSet& x,
                                             const VertexSet& y, std::size_t p, std::size_t cap) {
  MaskGraph mg(g, cap);
  if (x.empty() || y.empty() || !disjoint(x, y))
    throw std::invalid_argument("brute_force_important needs nonempty disjoint endpoints");
  const Mask xs = to_mask(x);
  const Mask ys = to_mask(y);
  const auto pool = members(mg.finite() & ~xs & ~ys);

  struct Candidate {
    Mask members;
    std::size_t size;
    Mask reach;
  };
  std::vector<Candidate> separators;
  std::unordered_map<Mask, bool> separates;
  for (std::size_t k = 0; k <= std::min(p, pool.size()); ++k)
    for_each_k_subset(pool, k, [&](Mask s) {
      Mask reach = mg.reach(xs, s);
      bool ok = (reach & ys) == 0;
      separates[s] = ok;
      if (ok) separators.push_back({s, k, reach});
      return false;
    });

  std::vector<Separator> result;
  for (const Candidate& c : separators) {
    bool minimal = true;
    for (Mask r = c.members; r && minimal; r &= r - 1)
      if (separates.at(c.members & ~(r & -r))) minimal = false;
    if (!minimal) continue;
    bool dominated = std::any_of(separators.begin(), separators.end(), [&](const Candidate& o) {
      return o.size <= c.size && (c.reach & o.reach) == c.reach && c.reach != o.reach;
    });
    if (!dominated) result.push_back({from_mask(c.members), x, y});
  }
  std::sort(result.begin(), result.end(),
            [](const Separator& a, const Separator& b) { return a.members < b.members; });
  return result;
}

std::optional<std::vector<std::size_t>> brute_force_edge_mwc(const Instance& inst,
                                                              std::size_t max_edges) {
  const auto& edges = inst.graph.edges();
  const std::size_t m = edges.size();
  if (m > std::min<std::size_t>(max_edges, 63) || inst.graph.vertex_count() > 63)
    throw std::length_error("edge oracle refuses " + std::to_string(m) + " edges");
  const Mask all_t = to_mask(inst.terminals);

  auto separated = [&](const std::vector<char>& gone) {
    std::vector<Mask> out(inst.graph.vertex_count(), 0);
    for (std::size_t i = 0; i < m; ++i)
      if (!gone[i]) out[edges[i].from] |= bit(edges[i].to);
    for (Vertex t : inst.terminals) {
      Mask seen = bit(t), frontier = seen;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= out[std::countr_zero(f)];
        next &= ~seen;
        seen |= next;
        frontier = next;
      }
      if (seen & all_t & ~bit(t)) return false;
    }
    return true;
  };

  std::vector<Vertex> ids(m);
  for (std::size_t i = 0; i < m; ++i) ids[i] = static_cast<Vertex>(i);
  std::optional<std::vector<std::size_t>> found;
  for (std::size_t k = 0; k <= std::min(inst.budget, m) && !found; ++k)
    for_each_k_subset(ids, k, [&](Mask s) {
      std::vector<char> gone(m, 0);
      for (Mask r = s; r; r &= r - 1) gone[std::countr_zero(r)] = 1;
      if (!separated(gone)) return false;
      std::vector<std::size_t> chosen;
      for (Mask r = s; r; r &= r - 1) chosen.push_back(std::countr_zero(r));
      found = std::move(chosen);
      return true;
    });
  return found;
}

std::optional<VertexSet> brute_force_multicut_k2(const Digraph& g,
                                                 const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                                 std::size_t p, std::size_t cap) {
  if (pairs.size() != 2) throw std::invalid_argument("multicut oracle expects exactly two pairs");
  MaskGraph mg(g, cap);
  for (const auto& [s, t] : pairs)
    if (s >= g.vertex_count() || t >= g.vertex_count())
      throw std::invalid_argument("multicut pair endpoint out of range");
  const auto pool = members(mg.finite());
  std::optional<VertexSet> found;
  for (std::size_t k = 0; k <= std::min(p, pool.size()) && !found; ++k)
    for_each_k_subset(pool, k, [&](Mask removed) {
      for (const auto& [s, t] : pairs)
        if (mg.reach(bit(s), removed) & bit(t) & ~removed) return false;
      found = from_mask(removed);
      return true;
    });
  return found;
}

}  // namespace dmwc
