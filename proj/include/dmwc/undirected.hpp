#pragma once

#include <optional>

#include "dmwc/digraph.hpp"

namespace dmwc {

/// Every edge (u,v) replaced by the pair (u,v),(v,u); pairs already present
/// are not duplicated, so the operation is idempotent.
Digraph underlying_undirected(const Digraph& g);

bool is_symmetric(const Digraph& g);

struct UndirectedOptions {
  /// Exhaustive subset search instead of branching (n <= 20 only).
  bool exhaustive = false;
};

/// Vertex multiway cut of size <= p avoiding the distinguished vertices on a
/// symmetric graph, or nullopt if none exists.
///
/// Picks the first terminal t still connected to another terminal and
/// branches over the important t-(T - t) separators; some optimum solution
/// contains one of them, so the search is complete. Throws
/// std::invalid_argument if the graph is not symmetric.
std::optional<VertexSet> solve_undirected(const Instance& inst, const UndirectedOptions& options = {});

}  // namespace dmwc
