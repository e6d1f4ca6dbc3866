// dmwc: command-line front end.
//
// Exit codes: 0 solved / feasible, 1 no solution, 2 input error.
// The first line on stdout is machine readable; diagnostics and reports go
// to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dmwc/generate.hpp"
#include "dmwc/instance_io.hpp"
#include "dmwc/pipeline.hpp"
#include "dmwc/separators.hpp"
#include "dmwc/shadows.hpp"

using namespace dmwc;

namespace {

constexpr int kSolved = 0;
constexpr int kNoSolution = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

InstanceFile load(const std::string& path) {
  try {
    return read_instance_file(path);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

VertexSet to_set(const InstanceFile& f, const std::vector<std::size_t>& ids, const char* what) {
  VertexSet s;
  for (std::size_t v : ids) {
    if (v >= f.graph.vertex_count())
      throw InputError(std::string(what) + " vertex " + std::to_string(v) + " out of range");
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

template <typename Seq>
std::string joined(const Seq& items) {
  std::ostringstream os;
  for (const auto& x : items) os << ' ' << x;
  return os.str();
}

void print_solution(const std::vector<std::size_t>& items) {
  std::cout << "SOLUTION " << items.size() << joined(items) << '\n';
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string file;
  std::optional<std::size_t> budget;
  bool min_search = false;
  std::string mode = "deterministic";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool quiet = false;
};

struct Answer {
  std::vector<std::size_t> items;  // vertex ids, or edge indices for the edge kind
  std::vector<PairCheck> certificate;
};

std::optional<Answer> solve_at(const InstanceFile& f, std::size_t p, const SolveOptions& opts,
                               SolveStats* stats) {
  std::optional<Solution> s;
  switch (f.kind) {
    case ProblemKind::vertex: {
      Instance inst = f.instance();
      inst.budget = p;
      s = solve_vertex(inst, opts, stats);
      break;
    }
    case ProblemKind::edge: {
      Instance inst = f.instance();
      inst.budget = p;
      s = solve_edge(inst, opts);
      break;
    }
    case ProblemKind::multicut2:
      s = solve_multicut_k2(f.graph, f.pairs, p, opts);
      break;
  }
  if (!s) return std::nullopt;
  Answer a;
  if (f.kind == ProblemKind::edge) a.items = s->edges;
  else a.items.assign(s->vertices.begin(), s->vertices.end());
  a.certificate = s->certificate;
  return a;
}

int run_solve(const SolveArgs& args) {
  InstanceFile f = load(args.file);
  const std::size_t p = args.budget.value_or(f.budget);
  SolveOptions opts;
  opts.mode = args.mode == "randomized" ? SamplingMode::randomized : SamplingMode::deterministic;
  opts.seed = args.seed;
  if (args.threads == 0) throw InputError("--threads / DMWC_THREADS must be at least 1");
  opts.threads = args.threads;
  SolveStats stats;

  std::optional<Answer> answer = solve_at(f, p, opts, &stats);
  std::size_t used = p;
  if (answer && args.min_search) {
    std::size_t lo = 0, hi = p;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (auto a = solve_at(f, mid, opts, nullptr)) {
        hi = mid;
        answer = std::move(a);
      } else {
        lo = mid + 1;
      }
    }
    used = hi;
  }

  if (!args.quiet) {
    std::cerr << "# kind=" << to_string(f.kind) << " n=" << f.graph.vertex_count()
              << " m=" << f.graph.edges().size() << " p=" << p << " mode=" << args.mode;
    if (opts.mode == SamplingMode::randomized) std::cerr << " seed=" << opts.seed;
    std::cerr << " threads=" << opts.threads << '\n';
    if (f.kind == ProblemKind::vertex)
      std::cerr << "# outer candidates=" << stats.outer_candidates
                << " inner candidates=" << stats.inner_candidates
                << " reduced instances=" << stats.reduced_instances << '\n';
    if (answer && args.min_search) std::cerr << "# minimum budget " << used << '\n';
    if (answer)
      for (const PairCheck& c : answer->certificate)
        std::cerr << "# " << c.from << " -> " << c.to << (c.separated ? " separated" : " CONNECTED") << '\n';
  }

  if (!answer) {
    std::cout << "NO\n";
    return kNoSolution;
  }
  print_solution(answer->items);
  return kSolved;
}

// --- verify --------------------------------------------------------------

std::vector<std::size_t> read_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream words(line.substr(0, line.find('#')));
    std::string head;
    if (!(words >> head)) continue;
    auto fail = [&](const std::string& msg) {
      return InputError(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (head == "NO") throw fail("solution file says NO; nothing to verify");
    if (head != "SOLUTION") throw fail("expected 'SOLUTION k v1 ... vk'");
    std::size_t k = 0;
    if (!(words >> k)) throw fail("missing solution size");
    std::vector<std::size_t> items;
    long long v = 0;
    while (words >> v) {
      if (v < 0) throw fail("negative id");
      items.push_back(static_cast<std::size_t>(v));
    }
    if (!words.eof()) throw fail("malformed id");
    if (items.size() != k) throw fail("size " + std::to_string(k) + " but " +
                                      std::to_string(items.size()) + " ids");
    return items;
  }
  throw InputError(path + ": no SOLUTION line");
}

int run_verify(const std::string& file, const std::string& solution) {
  InstanceFile f = load(file);
  std::vector<std::size_t> items = read_solution(solution);
  bool ok = false;
  switch (f.kind) {
    case ProblemKind::vertex:
      for (std::size_t v : items)
        if (v >= f.graph.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
      ok = items.size() == VertexSet(std::vector<Vertex>(items.begin(), items.end())).size() &&
           verify_solution(f.instance(), VertexSet(std::vector<Vertex>(items.begin(), items.end())));
      break;
    case ProblemKind::edge:
      ok = verify_edge_solution(f.instance(), items);
      break;
    case ProblemKind::multicut2: {
      VertexSet s = to_set(f, items, "solution");
      ok = s.size() == items.size() && verify_multicut(f.graph, f.pairs, f.budget, s);
      break;
    }
  }
  std::cout << (ok ? "VALID" : "INVALID") << '\n';
  return ok ? kSolved : kNoSolution;
}

// --- enumerate-seps ------------------------------------------------------

int run_enumerate(const std::string& file, const std::vector<std::size_t>& source,
                  const std::vector<std::size_t>& target, std::optional<std::size_t> budget) {
  InstanceFile f = load(file);
  const std::size_t p = budget.value_or(f.budget);
  if (source.empty()) {
    Instance inst = f.instance();
    inst.budget = p;
    ImportantCollection c = build_collection(inst);
    std::cout << "COUNT " << c.size() << '\n';
    for (const auto& e : c.entries)
      std::cout << "SEP " << e.separator.members.size() << joined(e.separator.members)
                << " WITNESSES" << joined(e.witnesses) << '\n';
    return c.empty() ? kNoSolution : kSolved;
  }
  VertexSet x = to_set(f, source, "source");
  VertexSet y = target.empty() ? f.terminals : to_set(f, target, "target");
  if (y.empty()) throw InputError("--target is required for multicut2 files");
  if (!disjoint(x, y)) throw InputError("source and target overlap");
  auto seps = enumerate_important(f.graph, x, y, p);
  std::cout << "COUNT " << seps.size() << '\n';
  for (const auto& s : seps) std::cout << "SEP " << s.members.size() << joined(s.members) << '\n';
  return seps.empty() ? kNoSolution : kSolved;
}

// --- shadow --------------------------------------------------------------

int run_shadow(const std::string& file, const std::vector<std::size_t>& set) {
  InstanceFile f = load(file);
  if (f.kind == ProblemKind::multicut2) throw InputError("shadow needs a vertex or edge instance");
  VertexSet s = to_set(f, set, "--set");
  if (!disjoint(s, f.graph.infinite_vertices()))
    throw InputError("--set may not contain terminals or distinguished vertices");
  ShadowReport r = shadow(f.graph, f.terminals, s);
  auto line = [](const char* name, const VertexSet& v) {
    std::cout << name << ' ' << v.size() << joined(v) << '\n';
  };
  line("FORWARD", r.forward);
  line("REVERSE", r.reverse);
  line("EXACT_FORWARD", r.exact_forward);
  line("EXACT_REVERSE", r.exact_reverse);
  std::cout << "THIN " << (is_thin(f.graph, f.terminals, s) ? "yes" : "no") << '\n';
  std::cout << "SHADOWLESS " << (is_shadowless(f.graph, f.terminals, s) ? "yes" : "no") << '\n';
  return kSolved;
}

// --- gen -----------------------------------------------------------------

struct GenArgs {
  GeneratorParams params;
  std::string fixture;
  std::string kind = "vertex";
  std::string output;
};

int run_gen(const GenArgs& args) {
  Instance inst;
  try {
    inst = args.fixture.empty() ? generate_instance(args.params)
                                : fixture(args.fixture, args.params.budget);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  InstanceFile f = InstanceFile::from_instance(inst, args.kind == "edge" ? ProblemKind::edge
                                                                         : ProblemKind::vertex);
  std::string text = serialize(f);
  if (args.output.empty() || args.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(args.output);
    if (!out) throw InputError("cannot write '" + args.output + "'");
    out << text;
  }
  return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed multiway cut solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a vertex, edge or multicut2 instance");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  solve_cmd->add_option("--budget,-p", solve.budget, "Override the budget in the file");
  solve_cmd->add_flag("--min-budget-search", solve.min_search,
                      "Binary-search the smallest feasible budget");
  solve_cmd->add_option("--mode", solve.mode)
      ->check(CLI::IsMember({"deterministic", "randomized"}))
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "Seed for randomized mode")->envname("DMWC_SEED");
  solve_cmd->add_option("--threads", solve.threads, "Worker threads")
      ->envname("DMWC_THREADS");
  solve_cmd->add_flag("--quiet,-q", solve.quiet, "No report on stderr");

  std::string enum_file;
  std::vector<std::size_t> source, target;
  std::optional<std::size_t> enum_budget;
  auto* enum_cmd = app.add_subcommand(
      "enumerate-seps", "Important separators; without --source, the whole collection over T");
  enum_cmd->add_option("file", enum_file, "Instance file")->required();
  enum_cmd->add_option("--source", source, "Source vertex ids")->delimiter(',');
  enum_cmd->add_option("--target", target, "Target vertex ids (default: terminals)")->delimiter(',');
  enum_cmd->add_option("--budget,-p", enum_budget, "Maximum separator size");

  std::string shadow_file;
  std::vector<std::size_t> shadow_set;
  auto* shadow_cmd = app.add_subcommand("shadow", "Shadows of a vertex set");
  shadow_cmd->add_option("file", shadow_file, "Instance file")->required();
  shadow_cmd->add_option("--set", shadow_set, "Vertex ids")->delimiter(',');

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--seed", gen.params.seed)->envname("DMWC_SEED");
  gen_cmd->add_option("--n", gen.params.n, "Vertex count")->capture_default_str();
  gen_cmd->add_option("--density", gen.params.edge_density, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--terminals,-k", gen.params.terminals)->capture_default_str();
  gen_cmd->add_option("--budget,-p", gen.params.budget)->capture_default_str();
  gen_cmd->add_option("--inf-fraction", gen.params.infinite_fraction,
                      "Probability that a non-terminal is distinguished")
      ->capture_default_str();
  gen_cmd->add_option("--fixture", gen.fixture, "Named fixture: two-cycle, remark2:r=R,k=K");
  gen_cmd->add_option("--kind", gen.kind)->check(CLI::IsMember({"vertex", "edge"}))->capture_default_str();
  gen_cmd->add_option("--output,-o", gen.output, "Output file (default stdout)");

  std::string verify_file, solution_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a SOLUTION line against an instance");
  verify_cmd->add_option("file", verify_file, "Instance file")->required();
  verify_cmd->add_option("--solution", solution_file, "File holding the SOLUTION line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*enum_cmd) return run_enumerate(enum_file, source, target, enum_budget);
    if (*shadow_cmd) return run_shadow(shadow_file, shadow_set);
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify_file, solution_file);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
