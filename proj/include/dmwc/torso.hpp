#pragma once

#include <optional>
#include <vector>

#include "dmwc/digraph.hpp"

namespace dmwc {

/// A graph on a subset of another graph's vertices, renumbered densely.
struct Relabeled {
  Digraph graph;
  std::vector<Vertex> to_original;               // new id -> old id
  std::vector<std::optional<Vertex>> from_original;  // old id -> new id

  VertexSet lift(const VertexSet& s) const;  // new ids -> old ids
  VertexSet lower(const VertexSet& s) const; // old ids -> new ids, must all be kept
};

/// torso(g, c): vertices c; edge (a,b) whenever g has an a->b path whose
/// internal vertices avoid c. Edges are simple and loop-free; the
/// distinguished set is restricted to c.
Relabeled torso(const Digraph& g, const VertexSet& c);

struct ReducedInstance {
  Instance instance;
  Relabeled map;
};

/// I/Z = (torso(G, V - z), T, p). Throws std::invalid_argument if z meets T.
ReducedInstance reduce_instance(const Instance& inst, const VertexSet& z);

}  // namespace dmwc
