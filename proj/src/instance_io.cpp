#include "dmwc/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace dmwc {

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::vertex: return "vertex";
    case ProblemKind::edge: return "edge";
    case ProblemKind::multicut2: return "multicut2";
  }
  return "?";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Instance InstanceFile::instance() const {
  if (kind == ProblemKind::multicut2)
    throw std::logic_error("a multicut2 file does not describe a multiway cut instance");
  return Instance(graph, terminals, budget);
}

InstanceFile InstanceFile::from_instance(const Instance& inst, ProblemKind kind) {
  InstanceFile f;
  f.kind = kind;
  f.graph = inst.graph;
  f.terminals = inst.terminals;
  f.budget = inst.budget;
  return f;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class Parser {
 public:
  InstanceFile run(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      auto tokens = tokenize(raw);
      if (!tokens.empty()) statement(tokens);
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_, column, msg);
  }

  std::size_t number(const Token& tok) const {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || end != tok.text.data() + tok.text.size())
      fail(tok.column, "expected a non-negative integer, got '" + tok.text + "'");
    return value;
  }

  Vertex vertex(const Token& tok) const {
    if (!n_) fail(tok.column, "vertex id before the 'n' line");
    std::size_t v = number(tok);
    if (v >= *n_) fail(tok.column, "vertex " + tok.text + " out of range (n=" + std::to_string(*n_) + ")");
    return static_cast<Vertex>(v);
  }

  void arity(const std::vector<Token>& tokens, std::size_t args) const {
    if (tokens.size() < args + 1)
      fail(tokens.back().column + tokens.back().text.size(),
           "'" + tokens[0].text + "' expects " + std::to_string(args) + " argument(s)");
    if (tokens.size() > args + 1) fail(tokens[args + 1].column, "unexpected token '" + tokens[args + 1].text + "'");
  }

  void statement(const std::vector<Token>& tokens) {
    const std::string& key = tokens[0].text;
    if (!kind_) {
      if (key != "dmwc") fail(tokens[0].column, "expected header 'dmwc vertex|edge|multicut2'");
      arity(tokens, 1);
      const std::string& k = tokens[1].text;
      if (k == "vertex") kind_ = ProblemKind::vertex;
      else if (k == "edge") kind_ = ProblemKind::edge;
      else if (k == "multicut2") kind_ = ProblemKind::multicut2;
      else fail(tokens[1].column, "unknown problem kind '" + k + "'");
      return;
    }
    if (key == "n") {
      arity(tokens, 1);
      if (n_) fail(tokens[0].column, "duplicate 'n' line");
      n_ = number(tokens[1]);
    } else if (key == "p") {
      arity(tokens, 1);
      if (budget_) fail(tokens[0].column, "duplicate 'p' line");
      budget_ = number(tokens[1]);
    } else if (key == "t") {
      arity(tokens, 1);
      if (*kind_ == ProblemKind::multicut2) fail(tokens[0].column, "multicut2 files use 'pair', not 't'");
      Vertex v = vertex(tokens[1]);
      if (terminals_.contains(v)) fail(tokens[1].column, "duplicate terminal " + tokens[1].text);
      terminals_.insert(v);
    } else if (key == "pair") {
      arity(tokens, 2);
      if (*kind_ != ProblemKind::multicut2) fail(tokens[0].column, "'pair' is only valid in multicut2 files");
      if (pairs_.size() == 2) fail(tokens[0].column, "multicut2 takes exactly two pairs");
      pairs_.emplace_back(vertex(tokens[1]), vertex(tokens[2]));
    } else if (key == "inf") {
      arity(tokens, 1);
      infinite_.insert(vertex(tokens[1]));
    } else if (key == "e") {
      arity(tokens, 2);
      edges_.push_back({vertex(tokens[1]), vertex(tokens[2])});
    } else {
      fail(tokens[0].column, "unknown keyword '" + key + "'");
    }
  }

  InstanceFile finish() {
    const std::size_t end_line = line_ + 1;
    if (!kind_) throw ParseError(end_line, 1, "missing header 'dmwc vertex|edge|multicut2'");
    if (!n_) throw ParseError(end_line, 1, "missing 'n' line");
    if (!budget_) throw ParseError(end_line, 1, "missing 'p' line");
    InstanceFile f;
    f.kind = *kind_;
    f.budget = *budget_;
    if (f.kind == ProblemKind::multicut2) {
      if (pairs_.size() != 2) throw ParseError(end_line, 1, "multicut2 needs exactly two 'pair' lines");
      f.pairs = pairs_;
      f.graph = Digraph(*n_, edges_, infinite_);
    } else {
      if (terminals_.empty()) throw ParseError(end_line, 1, "at least one terminal ('t' line) required");
      f.terminals = terminals_;
      f.graph = Digraph(*n_, edges_, set_union(infinite_, terminals_));
    }
    return f;
  }

  std::size_t line_ = 0;
  std::optional<ProblemKind> kind_;
  std::optional<std::size_t> n_;
  std::optional<std::size_t> budget_;
  VertexSet terminals_;
  VertexSet infinite_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<Edge> edges_;
};

}  // namespace

InstanceFile parse_instance(std::istream& in) { return Parser{}.run(in); }

InstanceFile parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string serialize(const InstanceFile& f) {
  std::ostringstream out;
  out << "dmwc " << to_string(f.kind) << '\n';
  out << "n " << f.graph.vertex_count() << '\n';
  out << "p " << f.budget << '\n';
  for (Vertex t : f.terminals) out << "t " << t << '\n';
  for (const auto& [s, t] : f.pairs) out << "pair " << s << ' ' << t << '\n';
  for (Vertex v : set_difference(f.graph.infinite_vertices(), f.terminals)) out << "inf " << v << '\n';
  for (const Edge& e : f.graph.edges()) out << "e " << e.from << ' ' << e.to << '\n';
  return out.str();
}

}  // namespace dmwc
