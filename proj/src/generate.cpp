#include "dmwc/generate.hpp"

#include <numeric>
#include <regex>
#include <stdexcept>

#include "dmwc/rng.hpp"

namespace dmwc {

Instance generate_instance(const GeneratorParams& params) {
  const std::size_t n = params.n;
  if (params.terminals < 1 || params.terminals > n)
    throw std::invalid_argument("generator needs 1 <= terminals <= n");
  if (!(params.edge_density >= 0.0 && params.edge_density <= 1.0))
    throw std::invalid_argument("edge density must lie in [0, 1]");
  if (!(params.infinite_fraction >= 0.0 && params.infinite_fraction <= 1.0))
    throw std::invalid_argument("infinite fraction must lie in [0, 1]");

  CounterRng rng(params.seed);
  std::vector<Vertex> slots(n);
  std::iota(slots.begin(), slots.end(), Vertex{0});
  for (std::size_t i = 0; i < params.terminals; ++i)
    std::swap(slots[i], slots[i + rng.next_below(n - i)]);
  VertexSet terminals(std::vector<Vertex>(slots.begin(), slots.begin() + params.terminals));

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.next_double() < params.edge_density) edges.push_back({u, v});

  VertexSet infinite = terminals;
  for (Vertex v = 0; v < n; ++v)
    if (!terminals.contains(v) && rng.next_double() < params.infinite_fraction) infinite.insert(v);

  return Instance(Digraph(n, std::move(edges), std::move(infinite)), std::move(terminals),
                  params.budget);
}

Instance shadow_gadget(std::size_t r, std::size_t k, std::size_t budget) {
  if (r < 1 || k < 1) throw std::invalid_argument("gadget fixture needs r >= 1 and k >= 1");
  auto t = [&](std::size_t j) { return static_cast<Vertex>(j); };
  auto a = [&](std::size_t i) { return static_cast<Vertex>(k + i); };
  auto b = [&](std::size_t i) { return static_cast<Vertex>(k + r + i); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) edges.push_back({a(i), t(j)});
  for (std::size_t i = 0; i < r; ++i) edges.push_back({b(i), a(i)});
  Vertex c = static_cast<Vertex>(k + 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j, ++c) {
      edges.push_back({c, a(i)});
      edges.push_back({c, a(j)});
    }
  std::vector<Vertex> terminals(k);
  std::iota(terminals.begin(), terminals.end(), Vertex{0});
  VertexSet ts(std::move(terminals));
  return Instance(Digraph(c, std::move(edges), ts), ts, budget);
}

Instance two_cycle(std::size_t budget) {
  std::vector<Edge> edges{{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  return Instance(Digraph(4, std::move(edges), {0, 1}), {0, 1}, budget);
}

Instance fixture(const std::string& name, std::size_t budget) {
  if (name == "two-cycle") return two_cycle(budget);
  static const std::regex gadget_pattern(R"(remark2:r=(\d+),k=(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, gadget_pattern))
    return shadow_gadget(std::stoul(m[1].str()), std::stoul(m[2].str()), budget);
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace dmwc
