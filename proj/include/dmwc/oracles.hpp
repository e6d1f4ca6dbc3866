#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dmwc/digraph.hpp"
#include "dmwc/separators.hpp"

namespace dmwc {

// Exhaustive reference implementations. They share no code with the solver
// paths beyond the Digraph container and work on 64-bit vertex masks.

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Minimum multiway cut if its size is <= p, ties broken by lexicographic
/// member order; nullopt otherwise. Throws std::length_error above `cap`.
std::optional<VertexSet> brute_force_mwc(const Instance& inst, std::size_t cap = kDefaultOracleCap);

/// Every inclusion-minimal multiway cut of size <= max_size.
std::vector<VertexSet> minimal_multiway_cuts(const Instance& inst, std::size_t max_size,
                                             std::size_t cap = kDefaultOracleCap);

/// Important x-y separators of size <= p straight from the definition: a
/// minimal separator S such that no separator S' with |S'| <= |S| has a
/// strictly larger reach from x.
std::vector<Separator> brute_force_important(const Digraph& g, const VertexSet& x,
                                             const VertexSet& y, std::size_t p,
                                             std::size_t cap = kDefaultOracleCap);

/// Minimum edge multiway cut (edge indices) of size <= p. Terminal
/// distinguishedness is irrelevant for edges.
std::optional<std::vector<std::size_t>> brute_force_edge_mwc(const Instance& inst,
                                                              std::size_t max_edges = 30);

/// Minimum vertex multicut of size <= p for two (source, sink) pairs where
/// pair endpoints may be deleted unless distinguished.
std::optional<VertexSet> brute_force_multicut_k2(const Digraph& g,
                                                 const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                                 std::size_t p, std::size_t cap = kDefaultOracleCap);

}  // namespace dmwc
