#include "dmwc/sampling.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "dmwc/rng.hpp"
#include "dmwc/shadows.hpp"

namespace dmwc {

namespace {

// Fixed-width bitset over vertex ids, used as the dedup key for candidates.
using Bits = std::vector<std::uint64_t>;

Bits to_bits(const VertexSet& s, std::size_t words) {
  Bits b(words, 0);
  for (Vertex v : s) b[v / 64] |= std::uint64_t{1} << (v % 64);
  return b;
}

void merge_into(Bits& acc, const Bits& other) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= other[i];
}

VertexSet from_bits(const Bits& b) {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < b.size(); ++w)
    for (std::uint64_t word = b[w]; word != 0; word &= word - 1)
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
  return VertexSet(std::move(out));
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

std::size_t saturating_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap;
    r *= base;
  }
  return r;
}

class FamilyBuilder {
 public:
  FamilyBuilder(CandidateFamily& family, std::size_t words) : family_(family), words_(words) {}

  void offer(const Bits& z, CandidateProvenance prov) {
    if (!seen_.try_emplace(z, family_.candidates.size()).second) return;
    family_.candidates.push_back(from_bits(z));
    family_.provenance.push_back(std::move(prov));
  }

  std::size_t words() const { return words_; }

 private:
  CandidateFamily& family_;
  std::size_t words_;
  std::map<Bits, std::size_t> seen_;
};

void exhaustive_family(const std::vector<Bits>& shadows, FamilyBuilder& out) {
  // Every union of a subfamily, discovered by closing under "add shadow i".
  std::vector<std::pair<Bits, std::uint32_t>> unions{{Bits(out.words(), 0), 0}};
  std::map<Bits, bool> known{{unions.front().first, true}};
  for (std::size_t i = 0; i < shadows.size(); ++i) {
    const std::size_t current = unions.size();
    for (std::size_t j = 0; j < current; ++j) {
      Bits u = unions[j].first;
      merge_into(u, shadows[i]);
      if (known.try_emplace(u, true).second)
        unions.emplace_back(std::move(u), unions[j].second | (std::uint32_t{1} << i));
    }
  }
  for (const auto& [z, mask] : unions) {
    CandidateProvenance prov{true, 0, {}};
    for (std::size_t i = 0; i < shadows.size(); ++i)
      if (mask >> i & 1) prov.chosen.push_back(i);
    out.offer(z, std::move(prov));
  }
}

// H ranges over subsets of the occupied function values of size <= max_h,
// in lexicographic order of their sorted value lists.
void splitter_selections(std::size_t function_index, const std::vector<std::size_t>& values,
                         const std::vector<Bits>& fiber_union, std::size_t max_h,
                         std::vector<std::size_t>& chosen, std::size_t next, const Bits& acc,
                         FamilyBuilder& out) {
  CandidateProvenance prov{false, function_index, {}};
  for (std::size_t j : chosen) prov.chosen.push_back(values[j]);
  out.offer(acc, std::move(prov));
  if (chosen.size() == max_h) return;
  for (std::size_t j = next; j < values.size(); ++j) {
    Bits extended = acc;
    merge_into(extended, fiber_union[j]);
    chosen.push_back(j);
    splitter_selections(function_index, values, fiber_union, max_h, chosen, j + 1, extended, out);
    chosen.pop_back();
  }
}

}  // namespace

ShadowUniverse shadow_universe(const Instance& inst) {
  ShadowUniverse u;
  u.collection = build_collection(inst);
  u.shadows.reserve(u.collection.size());
  for (const auto& entry : u.collection.entries)
    u.shadows.push_back(exact_reverse_shadow(inst.graph, inst.terminals, entry.separator.members));
  return u;
}

RandomSample random_sample(const Instance& inst, std::uint64_t seed) {
  ShadowUniverse u = shadow_universe(inst);
  RandomSample sample;
  sample.seed = seed;
  CounterRng rng(seed);
  for (const auto& x : u.shadows) {
    bool keep = rng.next_coin();
    sample.coins.push_back(keep);
    if (keep) sample.z = set_union(sample.z, x);
  }
  sample.shadows = std::move(u.shadows);
  return sample;
}

VertexSet random_set(const Instance& inst, std::uint64_t seed) {
  return random_sample(inst, seed).z;
}

std::vector<SplitterFunction> splitter_family(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw std::invalid_argument("splitter_family requires 1 <= r <= n");
  if (n <= r * r) return {SplitterFunction{0, n}};
  const std::size_t wanted = r * (r - 1) / 2 * ceil_log2(n) + 1;
  std::vector<SplitterFunction> family;
  for (std::uint64_t q = std::max<std::size_t>(r, 2); family.size() < wanted; ++q) {
    if (q >= n) {
      family.push_back({0, n});
      break;
    }
    if (is_prime(q)) family.push_back({q, static_cast<std::size_t>(q)});
  }
  return family;
}

CandidateFamily deterministic_sets(const Instance& inst, std::size_t exhaustive_limit) {
  ShadowUniverse u = shadow_universe(inst);
  CandidateFamily family;
  family.shadows = std::move(u.shadows);
  const std::size_t words = (inst.graph.vertex_count() + 63) / 64;
  FamilyBuilder out(family, words);

  std::vector<Bits> shadows;
  shadows.reserve(family.shadows.size());
  for (const auto& x : family.shadows) shadows.push_back(to_bits(x, words));
  const std::size_t n0 = shadows.size();

  if (n0 <= std::min(exhaustive_limit, kExhaustiveUniverse)) {
    exhaustive_family(shadows, out);
    return family;
  }

  // |A| <= 2^p shadows must be selected and |B| <= p*4^p must be avoided.
  const std::size_t p = inst.budget;
  const std::size_t big = std::size_t{1} << 40;
  const std::size_t a = std::min(saturating_pow(2, p, big), n0);
  const std::size_t b = std::min(p * saturating_pow(4, p, big), big);
  const std::size_t r = a + b;
  family.functions = r >= n0 ? std::vector<SplitterFunction>{{0, n0}} : splitter_family(n0, r);

  for (std::size_t fi = 0; fi < family.functions.size(); ++fi) {
    const SplitterFunction& h = family.functions[fi];
    std::map<std::size_t, Bits> fibers;
    for (std::size_t i = 0; i < n0; ++i) {
      auto [it, fresh] = fibers.try_emplace(h(i), Bits(words, 0));
      merge_into(it->second, shadows[i]);
    }
    std::vector<std::size_t> values;
    std::vector<Bits> fiber_union;
    for (auto& [value, bits] : fibers) {
      values.push_back(value);
      fiber_union.push_back(std::move(bits));
    }
    std::vector<std::size_t> chosen;
    splitter_selections(fi, values, fiber_union, a, chosen, 0, Bits(words, 0), out);
  }
  return family;
}

VertexSet reconstruct_candidate(const CandidateFamily& family, const CandidateProvenance& prov) {
  VertexSet z;
  if (prov.exhaustive) {
    for (std::size_t i : prov.chosen) z = set_union(z, family.shadows.at(i));
    return z;
  }
  const SplitterFunction& h = family.functions.at(prov.function_index);
  for (std::size_t i = 0; i < family.shadows.size(); ++i)
    if (std::find(prov.chosen.begin(), prov.chosen.end(), h(i)) != prov.chosen.end())
      z = set_union(z, family.shadows[i]);
  return z;
}

}  // namespace dmwc
