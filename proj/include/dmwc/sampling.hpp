#pragma once

#include <cstdint>
#include <vector>

#include "dmwc/separators.hpp"

namespace dmwc {

/// Exact reverse shadows of the members of I_p, one per member, in
/// collection order. This is the universe both samplers select from.
struct ShadowUniverse {
  ImportantCollection collection;
  std::vector<VertexSet> shadows;
};

ShadowUniverse shadow_universe(const Instance& inst);

struct RandomSample {
  VertexSet z;
  std::uint64_t seed = 0;
  std::vector<VertexSet> shadows;
  std::vector<bool> coins;  // coins[i]: shadows[i] was selected
};

/// One draw of the randomized sampler: each exact reverse shadow is kept with
/// probability 1/2 (one coin per shadow from CounterRng(seed)) and Z is the
/// union of the kept ones.
RandomSample random_sample(const Instance& inst, std::uint64_t seed);

VertexSet random_set(const Instance& inst, std::uint64_t seed);

/// x -> x mod modulus; modulus 0 denotes the identity. `range` is the size
/// of the codomain.
struct SplitterFunction {
  std::uint64_t modulus = 0;
  std::size_t range = 0;
  std::size_t operator()(std::size_t x) const {
    return modulus == 0 ? x : static_cast<std::size_t>(x % modulus);
  }
  friend bool operator==(const SplitterFunction&, const SplitterFunction&) = default;
};

/// A family of functions on [n] containing, for every r-subset M of [n], a
/// member injective on M.
///
/// If n <= r^2 the identity alone suffices. Otherwise the family is
/// x -> x mod q for the first C(r,2)*ceil(log2 n) + 1 primes q >= r (a prime
/// that fails on M divides one of the C(r,2) differences, each below n and so
/// with at most log2 n prime factors), truncated with the identity once a
/// prime reaches n. Throws std::invalid_argument unless 1 <= r <= n.
std::vector<SplitterFunction> splitter_family(std::size_t n, std::size_t r);

struct CandidateProvenance {
  /// True for the exhaustive construction; `chosen` then lists the selected
  /// shadow indices. Otherwise `chosen` is the set H of function values and
  /// `function_index` names the splitter function.
  bool exhaustive = false;
  std::size_t function_index = 0;
  std::vector<std::size_t> chosen;
};

struct CandidateFamily {
  std::vector<VertexSet> candidates;
  std::vector<CandidateProvenance> provenance;
  std::vector<VertexSet> shadows;     // the universe the provenance refers to
  std::vector<SplitterFunction> functions;
};

/// Largest universe handled by enumerating every subfamily of shadows.
inline constexpr std::size_t kExhaustiveUniverse = 16;

/// Deterministic replacement for the randomized sampler. For every thin S
/// with |S| <= p and every Y whose vertices each have an important separator
/// inside S, some candidate contains Y and avoids S. Candidates are
/// deduplicated, keeping the first provenance.
///
/// Universes of at most `exhaustive_limit` shadows use every subfamily union;
/// larger ones go through the splitter construction.
CandidateFamily deterministic_sets(const Instance& inst,
                                   std::size_t exhaustive_limit = kExhaustiveUniverse);

/// The set Z described by one provenance record.
VertexSet reconstruct_candidate(const CandidateFamily& family, const CandidateProvenance& prov);

}  // namespace dmwc
