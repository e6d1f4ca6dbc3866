#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dmwc/digraph.hpp"

namespace dmwc {

enum class ProblemKind { vertex, edge, multicut2 };

const char* to_string(ProblemKind kind);

/// Line-oriented instance file:
///
///   # comment
///   dmwc vertex|edge|multicut2
///   n <vertex count>
///   p <budget>
///   t <id>            one per terminal (vertex, edge)
///   pair <s> <t>      exactly two (multicut2)
///   inf <id>          distinguished vertex that is not a terminal
///   e <u> <v>         one per edge, order preserved
///
/// `serialize` writes exactly this layout: header, n, p, terminals or pairs,
/// inf lines ascending, then edges in order.
struct InstanceFile {
  ProblemKind kind = ProblemKind::vertex;
  Digraph graph;  // infinite set excludes terminals for the multicut kind
  VertexSet terminals;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t budget = 0;

  /// Vertex and edge kinds only.
  Instance instance() const;
  static InstanceFile from_instance(const Instance& inst, ProblemKind kind = ProblemKind::vertex);

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance_string(const std::string& text);
InstanceFile read_instance_file(const std::string& path);

std::string serialize(const InstanceFile& file);

}  // namespace dmwc
