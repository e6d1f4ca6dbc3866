#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "dmwc/vertex_set.hpp"

namespace dmwc {

struct Edge {
  Vertex from;
  Vertex to;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed multigraph on vertices 0..n-1. Vertices flagged infinite
/// (the distinguished set) may never be part of a separator.
///
/// Immutable after construction. Adjacency is stored in compressed form for
/// both directions, so reachability can run forwards or backwards without
/// building the reversed graph.
class Digraph {
 public:
  Digraph() = default;
  /// Throws std::invalid_argument if an edge endpoint or infinite vertex is
  /// out of range.
  Digraph(std::size_t vertex_count, std::vector<Edge> edges, VertexSet infinite = {});

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& infinite_vertices() const { return infinite_; }
  bool is_infinite(Vertex v) const { return infinite_mask_[v] != 0; }

  std::span<const Vertex> out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  /// Copy of this graph whose distinguished set also contains `extra`.
  Digraph with_infinite(const VertexSet& extra) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.infinite_ == b.infinite_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  VertexSet infinite_;
  VertexMask infinite_mask_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// A Directed Multiway Cut instance (G, T, p). Terminals are always
/// distinguished.
struct Instance {
  Digraph graph;
  VertexSet terminals;
  std::size_t budget = 0;

  Instance() = default;
  /// Throws std::invalid_argument unless terminals are nonempty, in range and
  /// contained in the graph's infinite set.
  Instance(Digraph g, VertexSet t, std::size_t p);

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class Direction { forward, backward };

/// Mask-based reachability used by the hot paths. Vertices with
/// `blocked[v] != 0` are neither entered nor expanded; blocked sources are
/// ignored. An empty `blocked` mask means nothing is blocked.
VertexMask reach_mask(const Digraph& g, std::span<const Vertex> sources,
                      const VertexMask& blocked, Direction dir = Direction::forward);

/// R+ of `sources` in g minus `removed`, sources included.
VertexSet reachable_from(const Digraph& g, const VertexSet& sources, const VertexSet& removed);

/// N+(a): out-neighbours of `a` that are not themselves in `a`.
VertexSet out_neighborhood(const Digraph& g, const VertexSet& a);

Digraph reverse(const Digraph& g);

/// Returned when every X-Y separator exceeds the requested size limit, or
/// when no separator exists at all because X reaches Y through distinguished
/// vertices only.
struct Infeasible {
  friend bool operator==(const Infeasible&, const Infeasible&) = default;
};

struct MinSeparator {
  std::size_t size = 0;
  /// The minimum separator whose reach from X is inclusion-wise maximal.
  VertexSet members;
};

using MinSeparatorResult = std::variant<MinSeparator, Infeasible>;

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Vertex-capacitated minimum X-Y separator via node splitting and unit
/// augmentations; at most `limit + 1` augmenting paths are searched.
/// Requires x, y nonempty and disjoint (std::invalid_argument otherwise).
MinSeparatorResult min_vertex_separator(const Digraph& g, const VertexSet& x, const VertexSet& y,
                                        std::size_t limit = kNoLimit);

/// Same as above with vertices in `removed` deleted from the graph.
MinSeparatorResult min_vertex_separator(const Digraph& g, const VertexMask& removed,
                                        const VertexSet& x, const VertexSet& y,
                                        std::size_t limit = kNoLimit);

void check_vertices(const Digraph& g, const VertexSet& s, const char* what);

}  // namespace dmwc
