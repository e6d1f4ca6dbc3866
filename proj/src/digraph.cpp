#include "dmwc/digraph.hpp"

#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dmwc {

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << '}';
}

void check_vertices(const Digraph& g, const VertexSet& s, const char* what) {
  if (!s.empty() && s.back() >= g.vertex_count())
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(s.back()) +
                                " out of range (n=" + std::to_string(g.vertex_count()) + ")");
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Edge> edges, VertexSet infinite)
    : n_(vertex_count), edges_(std::move(edges)), infinite_(std::move(infinite)) {
  for (const Edge& e : edges_)
    if (e.from >= n_ || e.to >= n_)
      throw std::invalid_argument("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                  ") has an endpoint out of range");
  check_vertices(*this, infinite_, "infinite vertex");
  infinite_mask_ = infinite_.to_mask(n_);

  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.from + 1];
    ++in_offsets_[e.to + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  std::vector<std::size_t> out_pos(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_pos(in_offsets_.begin(), in_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    out_targets_[out_pos[e.from]++] = e.to;
    in_sources_[in_pos[e.to]++] = e.from;
  }
}

Digraph Digraph::with_infinite(const VertexSet& extra) const {
  return Digraph(n_, edges_, set_union(infinite_, extra));
}

Instance::Instance(Digraph g, VertexSet t, std::size_t p)
    : graph(std::move(g)), terminals(std::move(t)), budget(p) {
  if (terminals.empty()) throw std::invalid_argument("instance needs at least one terminal");
  check_vertices(graph, terminals, "terminal");
  if (!is_subset(terminals, graph.infinite_vertices()))
    throw std::invalid_argument("terminals must be distinguished (infinite) vertices");
}

VertexMask reach_mask(const Digraph& g, std::span<const Vertex> sources, const VertexMask& blocked,
                      Direction dir) {
  const bool has_blocked = !blocked.empty();
  VertexMask seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex s : sources) {
    if ((has_blocked && blocked[s]) || seen[s]) continue;
    seen[s] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    auto next = dir == Direction::forward ? g.out(u) : g.in(u);
    for (Vertex w : next) {
      if (seen[w] || (has_blocked && blocked[w])) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

VertexSet reachable_from(const Digraph& g, const VertexSet& sources, const VertexSet& removed) {
  check_vertices(g, sources, "reachable_from source");
  check_vertices(g, removed, "reachable_from removed");
  if (!disjoint(sources, removed))
    throw std::invalid_argument("reachable_from: sources and removed set intersect");
  return VertexSet::from_mask(reach_mask(g, sources.members(), removed.to_mask(g.vertex_count())));
}

VertexSet out_neighborhood(const Digraph& g, const VertexSet& a) {
  check_vertices(g, a, "out_neighborhood");
  VertexMask in_a = a.to_mask(g.vertex_count());
  VertexMask nb(g.vertex_count(), 0);
  for (Vertex u : a)
    for (Vertex w : g.out(u))
      if (!in_a[w]) nb[w] = 1;
  return VertexSet::from_mask(nb);
}

Digraph reverse(const Digraph& g) {
  std::vector<Edge> flipped;
  flipped.reserve(g.edges().size());
  for (const Edge& e : g.edges()) flipped.push_back({e.to, e.from});
  return Digraph(g.vertex_count(), std::move(flipped), g.infinite_vertices());
}

namespace {

// Residual network for unit-capacity vertex splitting. Node 2v is v_in,
// 2v+1 is v_out, then source and sink.
class SplitNetwork {
 public:
  explicit SplitNetwork(std::size_t nodes) : first_(nodes, -1) {}

  void add_arc(std::size_t from, std::size_t to, std::size_t cap) {
    push(from, to, cap);
    push(to, from, 0);
  }

  // One BFS augmentation by a single unit; returns false when the sink is
  // unreachable in the residual graph.
  bool augment(std::size_t source, std::size_t sink) {
    std::vector<int> via(first_.size(), -1);
    std::vector<char> seen(first_.size(), 0);
    std::deque<std::size_t> queue{source};
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (int a = first_[u]; a != -1; a = next_[a]) {
        if (cap_[a] == 0 || seen[head_[a]]) continue;
        seen[head_[a]] = 1;
        via[head_[a]] = a;
        queue.push_back(head_[a]);
      }
    }
    if (!seen[sink]) return false;
    for (std::size_t v = sink; v != source; v = head_[via[v] ^ 1]) {
      --cap_[via[v]];
      ++cap_[via[v] ^ 1];
    }
    return true;
  }

  // Nodes from which the sink is reachable in the residual graph.
  std::vector<char> reaches_sink(std::size_t sink) const {
    std::vector<char> mark(first_.size(), 0);
    std::vector<std::size_t> stack{sink};
    mark[sink] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      // Arc a^1 runs u -> v when a runs v -> u.
      for (int a = first_[v]; a != -1; a = next_[a]) {
        std::size_t u = head_[a];
        if (!mark[u] && cap_[a ^ 1] > 0) {
          mark[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return mark;
  }

 private:
  void push(std::size_t from, std::size_t to, std::size_t cap) {
    head_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(first_[from]);
    first_[from] = static_cast<int>(head_.size() - 1);
  }

  std::vector<int> first_;
  std::vector<int> next_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> cap_;
};

}  // namespace

MinSeparatorResult min_vertex_separator(const Digraph& g, const VertexSet& x, const VertexSet& y,
                                        std::size_t limit) {
  return min_vertex_separator(g, VertexMask{}, x, y, limit);
}

MinSeparatorResult min_vertex_separator(const Digraph& g, const VertexMask& removed,
                                        const VertexSet& x, const VertexSet& y, std::size_t limit) {
  check_vertices(g, x, "separator source");
  check_vertices(g, y, "separator target");
  if (x.empty() || y.empty()) throw std::invalid_argument("separator endpoints must be nonempty");
  if (!disjoint(x, y)) throw std::invalid_argument("separator source and target intersect");

  const std::size_t n = g.vertex_count();
  const bool has_removed = !removed.empty();
  auto gone = [&](Vertex v) { return has_removed && removed[v]; };
  VertexMask in_x = x.to_mask(n);
  VertexMask in_y = y.to_mask(n);

  // Capacity n+1 exceeds any finite cut.
  const std::size_t inf = n + 1;
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  SplitNetwork net(2 * n + 2);
  std::size_t deletable = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (gone(v)) continue;
    bool finite = !in_x[v] && !in_y[v] && !g.is_infinite(v);
    deletable += finite;
    net.add_arc(2 * v, 2 * v + 1, finite ? 1 : inf);
    if (in_x[v]) net.add_arc(source, 2 * v, inf);
    if (in_y[v]) net.add_arc(2 * v + 1, sink, inf);
  }
  for (const Edge& e : g.edges())
    if (!gone(e.from) && !gone(e.to) && e.from != e.to) net.add_arc(2 * e.from + 1, 2 * e.to, inf);

  const std::size_t cap = std::min(limit, deletable);
  std::size_t flow = 0;
  while (net.augment(source, sink)) {
    if (++flow > cap) return Infeasible{};
  }

  std::vector<char> sink_side = net.reaches_sink(sink);
  MinSeparator result;
  result.size = flow;
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if (!gone(v) && !sink_side[2 * v] && sink_side[2 * v + 1]) members.push_back(v);
  result.members = VertexSet(std::move(members));
  return result;
}

}  // namespace dmwc
