#include <gtest/gtest.h>

#include "dmwc/oracles.hpp"
#include "dmwc/pipeline.hpp"
#include "dmwc/undirected.hpp"
#include "support.hpp"

using namespace dmwc;
using namespace dmwc::test;

TEST(Underlying, AddsReverseEdges) {
  Digraph g(2, {{0, 1}}, {1});
  Digraph u = underlying_undirected(g);
  EXPECT_EQ(u.edges(), (std::vector<Edge>{{0, 1}, {1, 0}}));
  EXPECT_EQ(u.infinite_vertices(), (VertexSet{1}));
  EXPECT_TRUE(is_symmetric(u));
  EXPECT_FALSE(is_symmetric(g));
  EXPECT_EQ(underlying_undirected(u), u);
}

TEST(Underlying, GadgetGraph) {
  Digraph g = gadget_instance().graph;
  Digraph u = underlying_undirected(g);
  EXPECT_EQ(u.edges().size(), 2 * g.edges().size());
  EXPECT_TRUE(is_symmetric(u));
}

namespace {

Instance symmetric(std::size_t n, std::vector<Edge> edges, VertexSet t, std::size_t p) {
  return Instance(underlying_undirected(Digraph(n, std::move(edges), t)), t, p);
}

}  // namespace

TEST(SolveUndirected, Examples) {
  // Star with center 3.
  Instance star = symmetric(4, {{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2}, 1);
  EXPECT_EQ(solve_undirected(star), (VertexSet{3}));
  Instance path = symmetric(3, {{0, 2}, {2, 1}}, {0, 1}, 0);
  EXPECT_EQ(solve_undirected(path), std::nullopt);
  Instance apart = symmetric(4, {{0, 2}, {1, 3}}, {0, 1}, 0);
  EXPECT_EQ(solve_undirected(apart), VertexSet{});
  EXPECT_THROW(solve_undirected(Instance(Digraph(2, {{0, 1}}, {0, 1}), {0, 1}, 1)),
               std::invalid_argument);
}

TEST(SolveUndirected, MatchesOracleAndRespectsDistinguished) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GeneratorParams gp;
    gp.seed = seed;
    gp.n = 8 + seed % 5;
    gp.edge_density = 0.1 + 0.03 * (seed % 4);
    gp.terminals = 2 + seed % 3;
    gp.budget = seed % 5;
    gp.infinite_fraction = seed % 3 == 0 ? 0.15 : 0.0;
    Instance d = generate_instance(gp);
    Instance inst(underlying_undirected(d.graph), d.terminals, d.budget);
    auto got = solve_undirected(inst);
    auto want = brute_force_mwc(inst);
    ASSERT_EQ(got.has_value(), want.has_value()) << "seed " << seed;
    if (got) {
      EXPECT_TRUE(verify_solution(inst, *got));
      EXPECT_TRUE(disjoint(*got, inst.graph.infinite_vertices()));
    }
    EXPECT_EQ(solve_undirected(inst, {.exhaustive = true}), want);
  }
}

TEST(SolveUndirected, BudgetMonotone) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorParams gp;
    gp.seed = seed + 77;
    gp.n = 9;
    gp.edge_density = 0.2;
    gp.terminals = 3;
    Instance d = generate_instance(gp);
    bool before = false;
    for (std::size_t p = 0; p <= 4; ++p) {
      Instance inst(underlying_undirected(d.graph), d.terminals, p);
      bool now = solve_undirected(inst).has_value();
      if (before) EXPECT_TRUE(now);
      before = now;
    }
  }
}
