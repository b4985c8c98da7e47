#include "oddtrail/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace oddtrail {

namespace {

[[noreturn]] void parse_error(int line, const std::string& msg) {
  fail(ErrorKind::kInvalidInput, "line " + std::to_string(line) + ": " + msg);
}

// Yields non-blank lines with comments stripped, keeping line numbers.
class Lines {
 public:
  explicit Lines(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      out = raw;
      return true;
    }
    return false;
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

int to_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    parse_error(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) parse_error(line, "expected an integer, got '" + tok + "'");
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidInput, "cannot open " + path);
  return in;
}

std::string join(const EdgeList& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + std::to_string(ids[i]);
  return s;
}

EdgeList read_ids(std::istringstream& ss, int line) {
  EdgeList ids;
  std::string tok;
  while (ss >> tok) ids.push_back(to_int(tok, line));
  return ids;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  Lines lines(in);
  std::string line;
  if (!lines.next(line)) fail(ErrorKind::kInvalidInput, "empty graph file");
  std::istringstream head(line);
  std::string word;
  std::string count;
  std::string extra;
  if (!(head >> word >> count) || word != "graph" || (head >> extra)) {
    parse_error(lines.number(), "expected 'graph <n>'");
  }
  const int n = to_int(count, lines.number());
  if (n < 0) parse_error(lines.number(), "negative vertex count");

  GraphFile f;
  std::vector<Endpoints> edges;
  while (lines.next(line)) {
    std::istringstream ss(line);
    std::string tag;
    std::string u;
    std::string v;
    std::string s;
    if (!(ss >> tag >> u >> v) || tag != "e") parse_error(lines.number(), "expected 'e <u> <v> [+|-]'");
    Endpoints ep{to_int(u, lines.number()), to_int(v, lines.number())};
    if (ep.u < 0 || ep.u >= n || ep.v < 0 || ep.v >= n) {
      parse_error(lines.number(), "vertex id out of range 0.." + std::to_string(n - 1));
    }
    int sign = 1;
    if (ss >> s) {
      if (s != "+" && s != "-") parse_error(lines.number(), "sign must be '+' or '-'");
      sign = s == "-" ? -1 : 1;
      f.has_signs = true;
      if (ss >> extra) parse_error(lines.number(), "trailing text after the sign");
    }
    edges.push_back(ep);
    f.sign.push_back(sign);
  }
  f.graph = MultiGraph::build(n, edges);
  return f;
}

GraphFile read_graph(const std::string& path) {
  std::ifstream in = open(path);
  return parse_graph(in);
}

std::string format_graph(const GraphFile& f) {
  std::string out = "graph " + std::to_string(f.graph.order()) + "\n";
  for (EdgeId e = 0; e < f.graph.size(); ++e) {
    const Endpoints& ep = f.graph.endpoints(e);
    out += "e " + std::to_string(ep.u) + " " + std::to_string(ep.v);
    if (f.has_signs) out += f.sign[e] < 0 ? " -" : " +";
    out += "\n";
  }
  return out;
}

Decomposition parse_decomposition(std::istream& in) {
  Lines lines(in);
  std::string line;
  if (!lines.next(line)) fail(ErrorKind::kInvalidInput, "empty decomposition file");
  std::istringstream head(line);
  std::string word;
  std::string root;
  std::string extra;
  if (!(head >> word >> root) || word != "root" || (head >> extra)) {
    parse_error(lines.number(), "expected 'root <v>' or 'root -'");
  }
  Decomposition d;
  if (root != "-") d.root = to_int(root, lines.number());
  while (lines.next(line)) {
    std::istringstream ss(line);
    std::string tag;
    std::string index;
    if (!(ss >> tag >> index) || tag != "part" || index.empty() || index.back() != ':') {
      parse_error(lines.number(), "expected 'part <i>: <edge ids>'");
    }
    index.pop_back();
    if (to_int(index, lines.number()) != static_cast<int>(d.parts.size())) {
      parse_error(lines.number(), "parts must be numbered 0, 1, ... in order");
    }
    d.parts.push_back(read_ids(ss, lines.number()));
  }
  return d;
}

Decomposition read_decomposition(const std::string& path) {
  std::ifstream in = open(path);
  return parse_decomposition(in);
}

std::string format_decomposition(const Decomposition& d, const MultiGraph* g) {
  std::string out = "root " + (d.root ? std::to_string(*d.root) : std::string("-")) + "\n";
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    out += "part " + std::to_string(i) + ": " + join(d.parts[i]) + "\n";
    if (!g || d.parts[i].empty()) continue;
    std::optional<VertexId> start;
    VertexList vs = vertices_of(*g, d.parts[i]);
    if (d.root && std::binary_search(vs.begin(), vs.end(), *d.root)) start = d.root;
    Trail t = eulerian_trail(*g, d.parts[i], start);
    out += "# trail: " + std::to_string(t.start);
    for (const Step& s : t.steps) out += " " + std::to_string(s.edge) + " " + std::to_string(s.to);
    out += "\n";
  }
  return out;
}

std::vector<Trail> parse_witnesses(std::istream& in, const MultiGraph& g) {
  Lines lines(in);
  std::string line;
  std::vector<Trail> out;
  while (lines.next(line)) {
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag != "circuit:") parse_error(lines.number(), "expected 'circuit: <edge ids>'");
    EdgeList ids = read_ids(ss, lines.number());
    for (EdgeId e : ids) {
      if (e < 0 || e >= g.size()) parse_error(lines.number(), "edge id " + std::to_string(e) + " out of range");
    }
    std::optional<Trail> c = circuit_from_edges(g, ids);
    if (!c) parse_error(lines.number(), "edges do not form a circuit");
    out.push_back(*c);
  }
  return out;
}

std::vector<Trail> read_witnesses(const std::string& path, const MultiGraph& g) {
  std::ifstream in = open(path);
  return parse_witnesses(in, g);
}

std::string format_witnesses(const std::vector<Trail>& circuits) {
  std::string out;
  for (const Trail& c : circuits) out += "circuit: " + join(c.edge_ids()) + "\n";
  return out;
}

std::string to_dot(const GraphFile& f, const Decomposition* d) {
  static const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "cyan4", "magenta"};
  const MultiGraph& g = f.graph;
  std::vector<int> part(g.size(), -1);
  if (d) {
    for (std::size_t i = 0; i < d->parts.size(); ++i) {
      for (EdgeId e : d->parts[i]) {
        if (e >= 0 && e < g.size()) part[e] = static_cast<int>(i);
      }
    }
  }
  std::string out = "graph oddtrail {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (d && d->root == v) out += " [peripheries=2, style=bold]";
    out += ";\n";
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Endpoints& ep = g.endpoints(e);
    out += "  " + std::to_string(ep.u) + " -- " + std::to_string(ep.v) + " [label=\"" + std::to_string(e) + "\"";
    if (part[e] >= 0) out += std::string(", color=") + kPalette[part[e] % 8];
    if (f.has_signs && f.sign[e] < 0) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kInvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace oddtrail
