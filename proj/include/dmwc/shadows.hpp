#pragma once

#include "dmwc/digraph.hpp"

namespace dmwc {

/// Shadows of a vertex set S with respect to the terminals T.
///
/// `reverse` holds the vertices v for which S is a v-T separator (v cannot
/// reach T once S is deleted); `forward` holds those that T cannot reach.
/// The exact variants further require S to be a *minimal* such separator.
struct ShadowReport {
  VertexSet forward;
  VertexSet reverse;
  VertexSet exact_forward;
  VertexSet exact_reverse;
  friend bool operator==(const ShadowReport&, const ShadowReport&) = default;
};

/// Throws std::invalid_argument when s meets t or the distinguished set.
ShadowReport shadow(const Digraph& g, const VertexSet& t, const VertexSet& s);

/// Only the exact reverse shadow; cheaper than a full report.
VertexSet exact_reverse_shadow(const Digraph& g, const VertexSet& t, const VertexSet& s);

/// No v in s is in the reverse shadow of s - {v}.
bool is_thin(const Digraph& g, const VertexSet& t, const VertexSet& s);

bool is_shadowless(const Digraph& g, const VertexSet& t, const VertexSet& s);

}  // namespace dmwc
