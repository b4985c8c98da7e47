#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oddtrail/decomposition.hpp"
#include "oddtrail/graph.hpp"

namespace oddtrail {

// Graph files:
//   graph <n>
//   e <u> <v> [+|-]
// with '#' comments and blank lines ignored; edge ids follow line order.
struct GraphFile {
  MultiGraph graph;
  std::vector<int> sign;  // +1 for edges without a sign column
  bool has_signs = false;
};

GraphFile parse_graph(std::istream& in);
GraphFile read_graph(const std::string& path);
std::string format_graph(const GraphFile& f);

// Decomposition files:
//   root <v> | root -
//   part <i>: <edge ids>
//   # trail: v0 e1 v1 ... (optional, one per part)
Decomposition parse_decomposition(std::istream& in);
Decomposition read_decomposition(const std::string& path);
// With g given, each part is followed by a closed-trail realization comment.
std::string format_decomposition(const Decomposition& d, const MultiGraph* g = nullptr);

// Witness files: one "circuit: <edge ids>" line per circuit.
std::vector<Trail> parse_witnesses(std::istream& in, const MultiGraph& g);
std::vector<Trail> read_witnesses(const std::string& path, const MultiGraph& g);
std::string format_witnesses(const std::vector<Trail>& circuits);

// Graphviz rendering; parts are coloured and the root is drawn doubled.
std::string to_dot(const GraphFile& f, const Decomposition* d = nullptr);

void write_text(const std::string& path, const std::string& text);

}  // namespace oddtrail
