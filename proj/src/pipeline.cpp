#include "dmwc/pipeline.hpp"

#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dmwc/rng.hpp"
#include "dmwc/sampling.hpp"
#include "dmwc/torso.hpp"
#include "dmwc/undirected.hpp"

namespace dmwc {

std::vector<PairCheck> separation_certificate(const Instance& inst, const VertexSet& s) {
  const Digraph& g = inst.graph;
  VertexMask blocked = s.to_mask(g.vertex_count());
  std::vector<PairCheck> checks;
  for (Vertex a : inst.terminals) {
    Vertex src[] = {a};
    VertexMask reach = reach_mask(g, src, blocked);
    for (Vertex b : inst.terminals)
      if (a != b) checks.push_back({a, b, reach[b] == 0});
  }
  return checks;
}

bool verify_solution(const Instance& inst, const VertexSet& s) {
  if (s.size() > inst.budget) return false;
  if (!s.empty() && s.back() >= inst.graph.vertex_count()) return false;
  for (Vertex v : s)
    if (inst.graph.is_infinite(v)) return false;
  for (const PairCheck& c : separation_certificate(inst, s))
    if (!c.separated) return false;
  return true;
}

bool verify_edge_solution(const Instance& inst, const std::vector<std::size_t>& edges) {
  const auto& all = inst.graph.edges();
  std::vector<char> gone(all.size(), 0);
  for (std::size_t i : edges) {
    if (i >= all.size() || gone[i]) return false;
    gone[i] = 1;
  }
  if (edges.size() > inst.budget) return false;
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!gone[i]) kept.push_back(all[i]);
  Instance rest(Digraph(inst.graph.vertex_count(), std::move(kept), inst.graph.infinite_vertices()),
                inst.terminals, inst.budget);
  return verify_solution(rest, {});
}

bool verify_multicut(const Digraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                     std::size_t p, const VertexSet& s) {
  if (s.size() > p) return false;
  check_vertices(g, s, "multicut");
  for (Vertex v : s)
    if (g.is_infinite(v)) return false;
  VertexMask blocked = s.to_mask(g.vertex_count());
  for (const auto& [from, to] : pairs) {
    if (blocked[from] || blocked[to]) continue;
    Vertex src[] = {from};
    if (reach_mask(g, src, blocked)[to]) return false;
  }
  return true;
}

Instance reverse_instance(const Instance& inst) {
  return Instance(reverse(inst.graph), inst.terminals, inst.budget);
}

namespace {

class Search {
 public:
  Search(const Instance& inst, SolveStats* stats) : inst_(inst), stats_(stats) {}

  // Solve the undirected instance underlying I/Z, memoized on Z.
  std::optional<VertexSet> attempt(const VertexSet& z) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(z); it != memo_.end()) return it->second;
    }
    ReducedInstance reduced = reduce_instance(inst_, z);
    Instance undirected(underlying_undirected(reduced.instance.graph), reduced.instance.terminals,
                        inst_.budget);
    std::optional<VertexSet> answer;
    if (auto cut = solve_undirected(undirected)) {
      answer = reduced.map.lift(*cut);
      if (!verify_solution(inst_, *answer))
        throw std::logic_error("reduced-instance solution does not solve the input instance");
    }
    std::lock_guard lock(mutex_);
    if (stats_) ++stats_->reduced_instances;
    memo_.try_emplace(z, answer);
    return answer;
  }

  Instance second_round(const VertexSet& z1) const {
    return Instance(reverse(inst_.graph).with_infinite(z1), inst_.terminals, inst_.budget);
  }

  void count_inner(std::size_t k) {
    std::lock_guard lock(mutex_);
    if (stats_) stats_->inner_candidates += k;
  }

 private:
  const Instance& inst_;
  SolveStats* stats_;
  std::mutex mutex_;
  std::map<VertexSet, std::optional<VertexSet>> memo_;
};

std::optional<VertexSet> solve_deterministic(const Instance& inst, unsigned threads,
                                             SolveStats* stats) {
  Search search(inst, stats);
  const CandidateFamily outer = deterministic_sets(inst);
  if (stats) stats->outer_candidates = outer.candidates.size();

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{none};
  std::vector<std::optional<VertexSet>> found(outer.candidates.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto lower_best = [&](std::size_t i) {
    std::size_t cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  };

  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < outer.candidates.size() && i < best.load(); i = next++) {
        const VertexSet& z1 = outer.candidates[i];
        const CandidateFamily inner = deterministic_sets(search.second_round(z1));
        search.count_inner(inner.candidates.size());
        for (const VertexSet& z2 : inner.candidates) {
          if (best.load() < i) break;
          if (auto cut = search.attempt(set_union(z1, z2))) {
            found[i] = std::move(cut);
            lower_best(i);
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  const unsigned workers = std::max(1u, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (best.load() == none) return std::nullopt;
  return found[best.load()];
}

std::optional<VertexSet> solve_randomized(const Instance& inst, std::uint64_t seed,
                                          SolveStats* stats) {
  Search search(inst, stats);
  const VertexSet z1 = random_set(inst, derive_seed(seed, 1));
  const VertexSet z2 = random_set(search.second_round(z1), derive_seed(seed, 2));
  if (stats) stats->outer_candidates = stats->inner_candidates = 1;
  return search.attempt(set_union(z1, z2));
}

Solution finish(const Instance& inst, VertexSet cut) {
  Solution s;
  s.certificate = separation_certificate(inst, cut);
  s.vertices = std::move(cut);
  return s;
}

}  // namespace

std::optional<Solution> solve_vertex(const Instance& inst, const SolveOptions& options,
                                     SolveStats* stats) {
  std::optional<VertexSet> cut = options.mode == SamplingMode::deterministic
                                     ? solve_deterministic(inst, options.threads, stats)
                                     : solve_randomized(inst, options.seed, stats);
  if (!cut) return std::nullopt;
  return finish(inst, std::move(*cut));
}

std::optional<Solution> solve_edge(const Instance& inst, const SolveOptions& options) {
  const Digraph& g = inst.graph;
  const std::size_t p = inst.budget;
  const std::size_t n = g.vertex_count();

  // copies[u] lists C_u: u alone for terminals, p+1 vertices otherwise.
  std::vector<std::vector<Vertex>> copies(n);
  Vertex next = 0;
  std::vector<Vertex> terminals;
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t count = inst.terminals.contains(u) ? 1 : p + 1;
    for (std::size_t c = 0; c < count; ++c) copies[u].push_back(next++);
    if (inst.terminals.contains(u)) terminals.push_back(copies[u].front());
  }
  const Vertex first_hub = next;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Vertex hub = first_hub + static_cast<Vertex>(i);
    for (Vertex x : copies[g.edges()[i].from]) edges.push_back({x, hub});
    for (Vertex y : copies[g.edges()[i].to]) edges.push_back({hub, y});
  }
  VertexSet t(terminals);
  Instance vertex_version(Digraph(first_hub + g.edges().size(), std::move(edges), t), t, p);

  auto solved = solve_vertex(vertex_version, options);
  if (!solved) return std::nullopt;
  Solution s;
  for (Vertex v : solved->vertices)
    if (v >= first_hub) s.edges.push_back(v - first_hub);
  if (!verify_edge_solution(inst, s.edges))
    throw std::logic_error("edge solution mapped back from hub vertices does not verify");
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    if (std::find(s.edges.begin(), s.edges.end(), i) == s.edges.end()) kept.push_back(g.edges()[i]);
  s.certificate = separation_certificate(
      Instance(Digraph(n, std::move(kept), g.infinite_vertices()), inst.terminals, p), {});
  return s;
}

std::optional<Solution> solve_multicut_k2(const Digraph& g,
                                          const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                          std::size_t p, const SolveOptions& options) {
  if (pairs.size() != 2) throw std::invalid_argument("multicut reduction needs exactly two pairs");
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  for (const auto& [a, b] : pairs)
    if (a >= n || b >= n) throw std::invalid_argument("multicut pair endpoint out of range");
  const Vertex s = n;
  const Vertex t = n + 1;
  std::vector<Edge> edges = g.edges();
  edges.push_back({s, pairs[0].first});
  edges.push_back({pairs[0].second, t});
  edges.push_back({t, pairs[1].first});
  edges.push_back({pairs[1].second, s});
  VertexSet infinite = g.infinite_vertices();
  infinite.insert(s);
  infinite.insert(t);
  Instance inst(Digraph(n + 2, std::move(edges), std::move(infinite)), {s, t}, p);

  auto solved = solve_vertex(inst, options);
  if (!solved) return std::nullopt;
  if (!verify_multicut(g, pairs, p, solved->vertices))
    throw std::logic_error("multicut answer does not separate the pairs");
  return solved;
}

TerminalDeletion allow_terminal_deletion(const Instance& inst) {
  const Digraph& g = inst.graph;
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  TerminalDeletion out;
  for (std::size_t i = 0; i < inst.terminals.size(); ++i) {
    const Vertex t = inst.terminals[i];
    const Vertex partner = n + static_cast<Vertex>(i);
    edges.push_back({t, partner});
    edges.push_back({partner, t});
    out.partner.push_back(partner);
  }
  VertexSet partners(out.partner);
  VertexSet infinite = set_union(set_difference(g.infinite_vertices(), inst.terminals), partners);
  out.instance = Instance(Digraph(n + inst.terminals.size(), std::move(edges), std::move(infinite)),
                          partners, inst.budget);
  return out;
}

std::optional<std::pair<std::size_t, Solution>> minimum_budget(const Instance& inst,
                                                                const SolveOptions& options) {
  auto at = [&](std::size_t k) {
    return solve_vertex(Instance(inst.graph, inst.terminals, k), options);
  };
  auto best = at(inst.budget);
  if (!best) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = inst.budget;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (auto s = at(mid)) {
      hi = mid;
      best = std::move(s);
    } else {
      lo = mid + 1;
    }
  }
  return std::make_pair(hi, std::move(*best));
}

}  // namespace dmwc
