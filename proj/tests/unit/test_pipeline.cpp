#include <gtest/gtest.h>

#include "dmwc/oracles.hpp"
#include "dmwc/pipeline.hpp"
#include "support.hpp"

using namespace dmwc;
using namespace dmwc::test;

TEST(Verify, Examples) {
  Instance tc = two_cycle(2);
  EXPECT_TRUE(verify_solution(tc, {2, 3}));
  EXPECT_FALSE(verify_solution(tc, {0, 2}));
  EXPECT_FALSE(verify_solution(tc, {}));
  EXPECT_FALSE(verify_solution(two_cycle(1), {2, 3}));
  auto cert = separation_certificate(tc, {2});
  ASSERT_EQ(cert.size(), 2u);
  EXPECT_EQ(cert[0], (PairCheck{0, 1, true}));
  EXPECT_EQ(cert[1], (PairCheck{1, 0, false}));
}

TEST(SolveVertex, TwoCycle) {
  auto s = solve_vertex(two_cycle(2));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->vertices, (VertexSet{2, 3}));
  for (const auto& c : s->certificate) EXPECT_TRUE(c.separated);
  EXPECT_FALSE(solve_vertex(two_cycle(1)));
}

TEST(SolveVertex, SinkTerminalsNeedNothing) {
  auto s = solve_vertex(gadget_instance(0));
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->vertices.empty());
}

TEST(SolveVertex, StatsAndThreadsDoNotChangeAnswer) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorParams gp;
    gp.seed = seed + 40;
    gp.n = 9;
    gp.edge_density = 0.2;
    gp.terminals = 3;
    gp.budget = 2;
    Instance inst = generate_instance(gp);
    SolveStats stats;
    auto one = solve_vertex(inst, {}, &stats);
    EXPECT_GE(stats.outer_candidates, 1u);
    auto four = solve_vertex(inst, {.threads = 4});
    EXPECT_EQ(one, four);
  }
}

namespace {

Instance corpus_instance(std::uint64_t i) {
  GeneratorParams gp;
  gp.seed = 9000 + i;
  gp.n = 5 + i % 5;
  gp.edge_density = 0.12 + 0.04 * (i % 6);
  gp.terminals = 2 + i % 2;
  gp.budget = i % 3;
  gp.infinite_fraction = i % 4 == 1 ? 0.2 : 0.0;
  return generate_instance(gp);
}

}  // namespace

TEST(SolveVertex, SoundAndCompleteAgainstOracle) {
  std::size_t yes = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Instance inst = corpus_instance(i);
    auto got = solve_vertex(inst);
    auto want = brute_force_mwc(inst);
    ASSERT_EQ(got.has_value(), want.has_value()) << "instance " << i;
    if (got) {
      EXPECT_TRUE(verify_solution(inst, got->vertices));
      ++yes;
    }
  }
  EXPECT_GT(yes, 40u);
}

TEST(SolveVertex, ReversalSymmetry) {
  for (std::uint64_t i = 0; i < 80; ++i) {
    Instance inst = corpus_instance(i);
    EXPECT_EQ(solve_vertex(inst).has_value(), solve_vertex(reverse_instance(inst)).has_value());
  }
}

TEST(SolveVertex, RandomizedIsSoundAndSeeded) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Instance inst = corpus_instance(i);
    SolveOptions opts{.mode = SamplingMode::randomized, .seed = i};
    auto a = solve_vertex(inst, opts);
    EXPECT_EQ(a, solve_vertex(inst, opts));
    if (a) EXPECT_TRUE(verify_solution(inst, a->vertices));
  }
}

TEST(MinimumBudget, FindsOptimum) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Instance inst = corpus_instance(i);
    Instance roomy(inst.graph, inst.terminals, 3);
    auto best = minimum_budget(roomy);
    auto opt = brute_force_mwc(roomy);
    ASSERT_EQ(best.has_value(), opt.has_value());
    if (best) {
      EXPECT_EQ(best->first, opt->size());
      EXPECT_EQ(best->second.vertices.size() <= best->first, true);
    }
  }
}

TEST(SolveEdge, Examples) {
  // t0 -> a=2 -> t1
  Instance path(Digraph(3, {{0, 2}, {2, 1}}, {0, 1}), {0, 1}, 1);
  auto s = solve_edge(path);
  ASSERT_TRUE(s);
  ASSERT_EQ(s->edges.size(), 1u);
  EXPECT_TRUE(verify_edge_solution(path, s->edges));
  Instance none(Digraph(3, {{0, 2}, {1, 2}}, {0, 1}), {0, 1}, 0);
  auto empty = solve_edge(none);
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->edges.empty());
  EXPECT_FALSE(solve_edge(Instance(path.graph, path.terminals, 0)));
}

TEST(SolveEdge, MatchesOracle) {
  for (std::uint64_t i = 0; i < 120; ++i) {
    GeneratorParams gp;
    gp.seed = 700 + i;
    gp.n = 4 + i % 5;
    gp.edge_density = 0.15 + 0.05 * (i % 3);
    gp.terminals = 2 + i % 2;
    gp.budget = i % 3;
    Instance inst = generate_instance(gp);
    auto got = solve_edge(inst);
    auto want = brute_force_edge_mwc(inst);
    ASSERT_EQ(got.has_value(), want.has_value()) << "instance " << i;
    if (got) EXPECT_TRUE(verify_edge_solution(inst, got->edges));
  }
}

TEST(SolveMulticut, Examples) {
  // 0 -> 4 -> 1 and 2 -> 5 -> 3
  Digraph g(6, {{0, 4}, {4, 1}, {2, 5}, {5, 3}});
  std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {2, 3}};
  auto s = solve_multicut_k2(g, pairs, 2);
  ASSERT_TRUE(s);
  EXPECT_TRUE(verify_multicut(g, pairs, 2, s->vertices));
  EXPECT_EQ(s->vertices.size(), 2u);
  Digraph apart(4, {{1, 0}, {3, 2}});
  auto empty = solve_multicut_k2(apart, pairs, 0);
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->vertices.empty());
  Digraph locked(4, {{0, 1}}, {0, 1});
  EXPECT_FALSE(solve_multicut_k2(locked, pairs, 3));
  EXPECT_THROW(solve_multicut_k2(g, {{0, 1}}, 1), std::invalid_argument);
}

TEST(SolveMulticut, MatchesOracle) {
  for (std::uint64_t i = 0; i < 120; ++i) {
    GeneratorParams gp;
    gp.seed = 1300 + i;
    gp.n = 4 + i % 5;
    gp.edge_density = 0.2 + 0.05 * (i % 3);
    gp.terminals = 1;
    gp.budget = i % 3;
    gp.infinite_fraction = i % 5 == 0 ? 0.2 : 0.0;
    Instance inst = generate_instance(gp);
    const Vertex n = static_cast<Vertex>(gp.n);
    std::vector<std::pair<Vertex, Vertex>> pairs{{0, static_cast<Vertex>(n - 1)},
                                                  {static_cast<Vertex>(n / 2), 1}};
    auto got = solve_multicut_k2(inst.graph, pairs, gp.budget);
    auto want = brute_force_multicut_k2(inst.graph, pairs, gp.budget);
    ASSERT_EQ(got.has_value(), want.has_value()) << "instance " << i;
    if (got) EXPECT_TRUE(verify_multicut(inst.graph, pairs, gp.budget, got->vertices));
  }
}

TEST(TerminalDeletion, Construction) {
  Instance one(Digraph(2, {{0, 1}}, {0}), {0}, 1);
  TerminalDeletion td = allow_terminal_deletion(one);
  EXPECT_EQ(td.instance.graph.vertex_count(), 3u);
  EXPECT_EQ(td.instance.graph.edges().size(), 3u);
  EXPECT_EQ(td.partner, (std::vector<Vertex>{2}));
  EXPECT_EQ(td.instance.terminals, (VertexSet{2}));
  EXPECT_FALSE(td.instance.graph.is_infinite(0));

  Instance r2 = gadget_instance(1);
  TerminalDeletion big = allow_terminal_deletion(r2);
  EXPECT_EQ(big.instance.graph.vertex_count(), r2.graph.vertex_count() + 2);
  EXPECT_EQ(big.instance.graph.edges().size(), r2.graph.edges().size() + 4);
}

TEST(TerminalDeletion, CutsMayDeleteTerminals) {
  // t0 <-> t1 directly: only deleting a terminal helps.
  Instance inst(Digraph(2, {{0, 1}, {1, 0}}, {0, 1}), {0, 1}, 1);
  EXPECT_FALSE(solve_vertex(inst));
  TerminalDeletion td = allow_terminal_deletion(inst);
  auto s = solve_vertex(td.instance);
  ASSERT_TRUE(s);
  ASSERT_EQ(s->vertices.size(), 1u);
  EXPECT_TRUE(inst.terminals.contains(s->vertices.front()));
  // Deleting that terminal in the original leaves no terminal pair connected.
  VertexSet rest = set_difference(inst.terminals, s->vertices);
  EXPECT_EQ(rest.size(), 1u);
}
