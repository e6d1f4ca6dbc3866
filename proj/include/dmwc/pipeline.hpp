#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dmwc/digraph.hpp"

namespace dmwc {

enum class SamplingMode { deterministic, randomized };

struct SolveOptions {
  SamplingMode mode = SamplingMode::deterministic;
  /// Only used in randomized mode.
  std::uint64_t seed = 0;
  /// Workers over the outer candidate family; the answer does not depend on it.
  unsigned threads = 1;
};

struct PairCheck {
  Vertex from;
  Vertex to;
  bool separated;
  friend bool operator==(const PairCheck&, const PairCheck&) = default;
};

struct Solution {
  VertexSet vertices;
  /// Edge variant only: indices into the input edge list.
  std::vector<std::size_t> edges;
  /// One entry per ordered terminal pair of the instance that was solved.
  std::vector<PairCheck> certificate;
  friend bool operator==(const Solution&, const Solution&) = default;
};

struct SolveStats {
  std::size_t outer_candidates = 0;
  std::size_t inner_candidates = 0;
  std::size_t reduced_instances = 0;  // distinct Z actually reduced and solved
};

/// Directed Vertex Multiway Cut. In deterministic mode the solver branches
/// over every outer candidate Z1 and, in reverse(G) with Z1 made
/// undeletable, every inner candidate Z2; the first Z = Z1 ∪ Z2 whose torso
/// has an undirected solution wins. Randomized mode makes one draw of each.
/// Every returned set is re-verified against `inst`.
std::optional<Solution> solve_vertex(const Instance& inst, const SolveOptions& options = {},
                                     SolveStats* stats = nullptr);

/// Directed Edge Multiway Cut through the vertex version: every non-terminal
/// u becomes p+1 copies and every edge a hub vertex between the copy sets.
std::optional<Solution> solve_edge(const Instance& inst, const SolveOptions& options = {});

/// Directed Multicut with two pairs, pair endpoints deletable unless
/// distinguished in g. Throws std::invalid_argument unless pairs.size() == 2.
std::optional<Solution> solve_multicut_k2(const Digraph& g,
                                          const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                          std::size_t p, const SolveOptions& options = {});

bool verify_solution(const Instance& inst, const VertexSet& s);
bool verify_edge_solution(const Instance& inst, const std::vector<std::size_t>& edges);
bool verify_multicut(const Digraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                     std::size_t p, const VertexSet& s);

std::vector<PairCheck> separation_certificate(const Instance& inst, const VertexSet& s);

/// Terminals become deletable: each t gets a partner t' with edges t->t'
/// and t'->t, and the partners are the new terminals. Vertex ids of the
/// input are unchanged, so a cut of the result is a cut of the input that may
/// include terminals.
struct TerminalDeletion {
  Instance instance;
  std::vector<Vertex> partner;  // partner[i] is the new terminal for terminals[i]
};

TerminalDeletion allow_terminal_deletion(const Instance& inst);

Instance reverse_instance(const Instance& inst);

/// Smallest k <= inst.budget with a solution, found by binary search over the
/// budget, together with that solution.
std::optional<std::pair<std::size_t, Solution>> minimum_budget(const Instance& inst,
                                                                const SolveOptions& options = {});

}  // namespace dmwc
