#include <gtest/gtest.h>

#include <set>

#include "dmwc/oracles.hpp"
#include "dmwc/pipeline.hpp"
#include "dmwc/shadows.hpp"
#include "dmwc/torso.hpp"
#include "support.hpp"

using namespace dmwc;
using namespace dmwc::test;

namespace {

// Edges of a relabeled torso, in original ids.
std::set<Edge> original_edges(const Relabeled& r) {
  std::set<Edge> out;
  for (const Edge& e : r.graph.edges()) out.insert({r.to_original[e.from], r.to_original[e.to]});
  return out;
}

VertexSet everything_but(std::size_t n, const VertexSet& drop) {
  VertexSet c;
  for (Vertex v = 0; v < n; ++v)
    if (!drop.contains(v)) c.insert(v);
  return c;
}

}  // namespace

TEST(Torso, FullVertexSetIsIdentityUpToMultiplicity) {
  Digraph g(4, {{0, 1}, {0, 1}, {2, 3}, {3, 0}}, {2});
  Relabeled r = torso(g, {0, 1, 2, 3});
  EXPECT_EQ(original_edges(r), (std::set<Edge>{{0, 1}, {2, 3}, {3, 0}}));
  EXPECT_EQ(r.graph.edges().size(), 3u);
  EXPECT_EQ(r.graph.infinite_vertices(), (VertexSet{2}));
}

TEST(Torso, ChainContracts) {
  Digraph g(3, {{0, 1}, {1, 2}});
  Relabeled r = torso(g, {0, 2});
  EXPECT_EQ(r.graph.vertex_count(), 2u);
  EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(r.to_original, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(r.lower({2}), (VertexSet{1}));
  EXPECT_THROW(r.lower({1}), std::invalid_argument);
}

TEST(Torso, GadgetGraphWithoutA1) {
  Digraph g = gadget_instance().graph;
  std::set<Edge> before(g.edges().begin(), g.edges().end());
  Relabeled r = torso(g, everything_but(11, {gadget::a1}));
  std::set<Edge> after = original_edges(r);
  std::set<Edge> added;
  for (const Edge& e : after)
    if (!before.contains(e)) added.insert(e);
  EXPECT_EQ(added, (std::set<Edge>{{gadget::b1, gadget::t1},
                                   {gadget::b1, gadget::t2},
                                   {gadget::c12, gadget::t1},
                                   {gadget::c12, gadget::t2},
                                   {gadget::c13, gadget::t1},
                                   {gadget::c13, gadget::t2}}));
  for (const Edge& e : before)
    if (e.from != gadget::a1 && e.to != gadget::a1) EXPECT_TRUE(after.contains(e));
}

TEST(Reduce, EmptyZKeepsInstance) {
  Instance inst = gadget_instance(2);
  ReducedInstance red = reduce_instance(inst, {});
  EXPECT_EQ(red.instance.terminals, inst.terminals);
  std::set<Edge> a(inst.graph.edges().begin(), inst.graph.edges().end());
  EXPECT_EQ(original_edges(red.map), a);
}

TEST(Reduce, GadgetGraphWithoutBAndC) {
  Instance inst = gadget_instance(2);
  ReducedInstance red = reduce_instance(inst, {gadget::b1, gadget::b2, gadget::b3, gadget::c12, gadget::c13, gadget::c23});
  EXPECT_EQ(red.map.to_original, (std::vector<Vertex>{gadget::t1, gadget::t2, gadget::a1, gadget::a2, gadget::a3}));
  std::set<Edge> expected;
  for (Vertex a : {gadget::a1, gadget::a2, gadget::a3})
    for (Vertex t : {gadget::t1, gadget::t2}) expected.insert({a, t});
  EXPECT_EQ(original_edges(red.map), expected);
  EXPECT_THROW(reduce_instance(inst, {gadget::t1}), std::invalid_argument);
}

TEST(Torso, KeepsInducedSubgraph) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph g = random_digraph(seed, 7, 0.3);
    VertexSet c = mask_set(CounterRng(seed).next_below(128));
    std::set<Edge> t = original_edges(torso(g, c));
    for (const Edge& e : g.edges())
      if (c.contains(e.from) && c.contains(e.to) && e.from != e.to) EXPECT_TRUE(t.contains(e));
  }
}

// a->b in g - s iff a->b in torso(g, c) - s, for s ⊆ c and a, b ∈ c - s.
TEST(Torso, PreservesSeparation) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 5;
    Digraph g = random_digraph(seed, n, 0.3);
    for (std::uint64_t cm = 0; cm < 32; ++cm) {
      VertexSet c = mask_set(cm);
      Relabeled r = torso(g, c);
      for (std::uint64_t sm = 0; sm < 32; ++sm) {
        if ((sm & ~cm) != 0) continue;
        VertexSet s = mask_set(sm);
        VertexSet s_low = r.lower(s);
        for (Vertex a : c)
          for (Vertex b : c) {
            if (a == b || s.contains(a) || s.contains(b)) continue;
            bool in_g = naive_reach(g, {a}, s).contains(b);
            bool in_t = naive_reach(r.graph, r.lower({a}), s_low).contains(*r.from_original[b]);
            EXPECT_EQ(in_g, in_t) << "seed " << seed << " c=" << c << " s=" << s;
          }
      }
    }
  }
}

namespace {

Instance small_instance(std::uint64_t seed) {
  GeneratorParams gp;
  gp.seed = seed;
  gp.n = 7;
  gp.edge_density = 0.25;
  gp.terminals = 2 + seed % 2;
  gp.budget = 2;
  gp.infinite_fraction = 0.1;
  return generate_instance(gp);
}

}  // namespace

TEST(Reduce, SolutionsLift) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = small_instance(seed);
    CounterRng rng(seed);
    for (int trial = 0; trial < 5; ++trial) {
      VertexSet z;
      for (Vertex v = 0; v < inst.graph.vertex_count(); ++v)
        if (!inst.terminals.contains(v) && rng.next_below(3) == 0) z.insert(v);
      ReducedInstance red = reduce_instance(inst, z);
      if (auto s = brute_force_mwc(red.instance)) EXPECT_TRUE(verify_solution(inst, red.map.lift(*s)));
    }
  }
}

// A solution avoiding Z whose shadows lie inside Z becomes shadowless.
TEST(Reduce, ShadowsInsideZAreEliminated) {
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance inst = small_instance(seed);
    for (const VertexSet& s : minimal_multiway_cuts(inst, 2)) {
      ShadowReport r = shadow(inst.graph, inst.terminals, s);
      VertexSet z = set_union(r.forward, r.reverse);
      ReducedInstance red = reduce_instance(inst, z);
      VertexSet low = red.map.lower(s);
      EXPECT_TRUE(verify_solution(red.instance, low));
      EXPECT_TRUE(is_shadowless(red.instance.graph, red.instance.terminals, low));
      ++seen;
    }
  }
  EXPECT_GT(seen, 10u);
}
