#pragma once

#include <cstdint>
#include <string>

#include "dmwc/digraph.hpp"

namespace dmwc {

struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t n = 8;
  double edge_density = 0.25;
  std::size_t terminals = 2;
  std::size_t budget = 2;
  double infinite_fraction = 0.0;
};

/// Random instance drawn from CounterRng(seed) in this order:
///  1. terminals: partial Fisher-Yates, for i < k swap slot i with slot
///     i + next_below(n - i), terminals are the first k slots;
///  2. edges: for u = 0..n-1, v = 0..n-1, u != v, keep (u,v) when
///     next_double() < edge_density;
///  3. for each non-terminal v ascending, distinguished when
///     next_double() < infinite_fraction.
/// Throws std::invalid_argument on out-of-range parameters.
Instance generate_instance(const GeneratorParams& params);

/// The exact-shadow example graph on terminals t_1..t_k, vertices a_1..a_r
/// with edges a_i -> t_j, b_i -> a_i, and c_ij -> a_i, a_j for i < j.
/// Ids: t_j = j-1, a_i = k+i-1, b_i = k+r+i-1, then c_ij in lexicographic
/// order of (i, j).
Instance shadow_gadget(std::size_t r, std::size_t k, std::size_t budget);

/// t1 -> x -> t2 and t2 -> y -> t1 with ids t1=0, t2=1, x=2, y=3.
Instance two_cycle(std::size_t budget);

/// Named fixtures: "remark2:r=R,k=K" and "two-cycle". Throws
/// std::invalid_argument on unknown names.
Instance fixture(const std::string& name, std::size_t budget);

}  // namespace dmwc
