#pragma once

#include <vector>

#include "dmwc/digraph.hpp"

namespace dmwc {

/// An X-Y separator together with the X and Y it separates.
struct Separator {
  VertexSet members;
  VertexSet source;
  VertexSet target;
  friend bool operator==(const Separator&, const Separator&) = default;
};

/// One distinct member of the collection I_p, with every witness v for which
/// it is an important v-T separator. `separator.source` is the first witness.
struct CollectionEntry {
  Separator separator;
  std::vector<Vertex> witnesses;
};

struct ImportantCollection {
  std::vector<CollectionEntry> entries;  // sorted by member list
  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

/// s avoids x, y and the distinguished vertices and cuts every x->y path.
bool is_separator(const Digraph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s);

bool is_minimal_separator(const Digraph& g, const VertexSet& x, const VertexSet& y,
                          const VertexSet& s);

/// s is important iff it is the unique minimum R+_{g-s}(x) to y separator.
bool is_important(const Digraph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s);

/// All important x-y separators of size at most p, sorted by member list.
/// Returns {∅} when x cannot reach y and an empty list when no separator of
/// size <= p exists.
std::vector<Separator> enumerate_important(const Digraph& g, const VertexSet& x,
                                           const VertexSet& y, std::size_t p);

/// Variant operating on g with `removed` vertices deleted.
std::vector<Separator> enumerate_important(const Digraph& g, const VertexMask& removed,
                                           const VertexSet& x, const VertexSet& y, std::size_t p);

/// I_p: important v-T separators of size <= p for every non-terminal v.
ImportantCollection build_collection(const Instance& inst);

}  // namespace dmwc
