#include "oddtrail/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "unit_flow.hpp"

namespace oddtrail {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid input";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kNotFound: return "not found";
    case ErrorKind::kBoundExceeded: return "bound exceeded";
    case ErrorKind::kTheoremViolation: return "theorem violation";
  }
  return "unknown";
}

MultiGraph MultiGraph::build(int n, std::span<const Endpoints> edges) {
  if (n < 0) fail(ErrorKind::kInvalidInput, "negative vertex count");
  MultiGraph g;
  g.n_ = n;
  g.edges_.assign(edges.begin(), edges.end());
  g.incidence_.assign(n, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(ErrorKind::kInvalidInput, "edge " + std::to_string(i) + " has endpoint out of range [0, " +
                                         std::to_string(n) + ")");
    }
    EdgeId e = static_cast<EdgeId>(i);
    g.incidence_[u].push_back({e, v});
    g.incidence_[v].push_back({e, u});
  }
  return g;
}

bool MultiGraph::is_regular(int d) const {
  for (VertexId v = 0; v < n_; ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

int MultiGraph::loop_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Endpoints& e) { return e.is_loop(); }));
}

bool MultiGraph::audit() const {
  if (static_cast<int>(incidence_.size()) != n_) return false;
  long degree_sum = 0;
  std::vector<int> seen(edges_.size(), 0);
  for (VertexId v = 0; v < n_; ++v) {
    degree_sum += degree(v);
    EdgeId prev = -1;
    for (const Incidence& inc : incidence_[v]) {
      if (inc.edge < prev || inc.edge < 0 || inc.edge >= size()) return false;
      prev = inc.edge;
      const Endpoints& ep = edges_[inc.edge];
      if (!(ep.u == v && ep.v == inc.other) && !(ep.v == v && ep.u == inc.other)) return false;
      ++seen[inc.edge];
    }
  }
  if (degree_sum != 2L * size()) return false;
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 2; });
}

EdgeList MultiGraph::all_edges() const {
  EdgeList out(edges_.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

MultiGraph MultiGraph::with_added_edges(std::span<const Endpoints> extra) const {
  std::vector<Endpoints> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return build(n_, all);
}

// --- Subgraph helpers ----------------------------------------------------------

ComponentSplit components(const MultiGraph& g) { return components(g, g.all_edges()); }

ComponentSplit components(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> member(g.size(), 0);
  for (EdgeId e : edges) member[e] = 1;
  std::vector<char> touched(g.order(), 0);
  for (EdgeId e : edges) {
    touched[g.endpoints(e).u] = 1;
    touched[g.endpoints(e).v] = 1;
  }

  ComponentSplit out;
  std::vector<char> seen(g.order(), 0);
  for (VertexId s = 0; s < g.order(); ++s) {
    if (!touched[s]) {
      out.isolated.push_back(s);
      continue;
    }
    if (seen[s]) continue;
    Component comp;
    std::queue<VertexId> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      comp.vertices.push_back(x);
      for (const Incidence& inc : g.incident(x)) {
        if (!member[inc.edge]) continue;
        comp.edges.push_back(inc.edge);
        if (!seen[inc.other]) {
          seen[inc.other] = 1;
          q.push(inc.other);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    comp.edges.erase(std::unique(comp.edges.begin(), comp.edges.end()), comp.edges.end());
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const MultiGraph& g) {
  if (g.order() == 0) return true;
  ComponentSplit split = components(g);
  return split.components.size() + split.isolated.size() == 1;
}

bool is_connected(const MultiGraph& g, std::span<const EdgeId> edges) {
  return components(g, edges).components.size() <= 1;
}

VertexList vertices_of(const MultiGraph& g, std::span<const EdgeId> edges) {
  VertexList out;
  out.reserve(edges.size() * 2);
  for (EdgeId e : edges) {
    out.push_back(g.endpoints(e).u);
    out.push_back(g.endpoints(e).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int degree_in(const MultiGraph& g, std::span<const EdgeId> edges, VertexId v) {
  int d = 0;
  for (EdgeId e : edges) {
    d += (g.endpoints(e).u == v) + (g.endpoints(e).v == v);
  }
  return d;
}

std::vector<int> degrees_in(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e : edges) {
    ++deg[g.endpoints(e).u];
    ++deg[g.endpoints(e).v];
  }
  return deg;
}

VertexList odd_vertices(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg = degrees_in(g, edges);
  VertexList out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (deg[v] % 2 != 0) out.push_back(v);
  }
  return out;
}

bool is_eulerian_subgraph(const MultiGraph& g, std::span<const EdgeId> edges) {
  return !edges.empty() && odd_vertices(g, edges).empty() && is_connected(g, edges);
}

EdgeList induced_edges(const MultiGraph& g, std::span<const VertexId> side) {
  std::vector<char> in(g.order(), 0);
  for (VertexId v : side) in[v] = 1;
  EdgeList out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (in[g.endpoints(e).u] && in[g.endpoints(e).v]) out.push_back(e);
  }
  return out;
}

EdgeList edge_union(std::span<const EdgeId> a, std::span<const EdgeId> b) {
  EdgeList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeList edge_difference(std::span<const EdgeId> a, std::span<const EdgeId> b) {
  EdgeList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool share_vertex(std::span<const VertexId> a, std::span<const VertexId> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

// --- Connectivity --------------------------------------------------------------

int local_edge_connectivity(const MultiGraph& g, VertexId s, VertexId t, int limit) {
  detail::UnitFlow flow(g);
  return flow.run(s, t, limit);
}

int edge_connectivity(const MultiGraph& g) {
  require(g.order() > 0, "edge_connectivity: empty graph");
  if (g.order() == 1) return 2 * g.size();
  if (!is_connected(g)) return 0;
  int best = g.size();
  for (VertexId t = 1; t < g.order(); ++t) {
    best = std::min(best, local_edge_connectivity(g, 0, t, best));
  }
  return best;
}

std::optional<Cut> min_cut(const MultiGraph& g, int bound) {
  require(g.order() > 0, "min_cut: empty graph");
  if (g.order() == 1) return std::nullopt;
  int best = bound + 1;
  VertexList best_side;
  for (VertexId t = 1; t < g.order(); ++t) {
    detail::UnitFlow flow(g);
    int value = flow.run(0, t, best + 1);
    if (value > best) continue;
    std::vector<char> reach = flow.residual_reach(0);
    VertexList side;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (reach[v]) side.push_back(v);
    }
    if (value < best || side < best_side) {
      best = value;
      best_side = std::move(side);
    }
  }
  if (best > bound) return std::nullopt;
  Cut cut;
  cut.side = best_side;
  std::vector<char> in(g.order(), 0);
  for (VertexId v : cut.side) in[v] = 1;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (in[g.endpoints(e).u] != in[g.endpoints(e).v]) cut.edges.push_back(e);
  }
  return cut;
}

std::optional<std::pair<VertexList, VertexList>> bipartition(const MultiGraph& g) {
  if (g.order() == 1 && g.size() == 0) return std::pair{VertexList{0}, VertexList{}};
  return bipartition(g, g.all_edges());
}

std::optional<std::pair<VertexList, VertexList>> bipartition(const MultiGraph& g,
                                                             std::span<const EdgeId> edges) {
  std::vector<char> member(g.size(), 0);
  for (EdgeId e : edges) {
    if (g.endpoints(e).is_loop()) return std::nullopt;
    member[e] = 1;
  }
  std::vector<int> colour(g.order(), -1);
  for (VertexId s : vertices_of(g, edges)) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(x)) {
        if (!member[inc.edge]) continue;
        if (colour[inc.other] == -1) {
          colour[inc.other] = 1 - colour[x];
          q.push(inc.other);
        } else if (colour[inc.other] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexList, VertexList> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (colour[v] == 0) out.first.push_back(v);
    if (colour[v] == 1) out.second.push_back(v);
  }
  return out;
}

// --- Derived graphs ------------------------------------------------------------

Contraction contract(const MultiGraph& g, std::span<const VertexId> block) {
  require(!block.empty(), "contract: empty block");
  std::vector<char> in(g.order(), 0);
  for (VertexId v : block) {
    require(v >= 0 && v < g.order(), "contract: block vertex out of range");
    in[v] = 1;
  }
  Contraction out;
  out.vertex_map.assign(g.order(), -1);
  int next = 0;
  bool placed = false;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!in[v]) {
      out.vertex_map[v] = next++;
    } else if (!placed) {
      out.block_vertex = next++;
      placed = true;
    }
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    if (in[v]) out.vertex_map[v] = out.block_vertex;
  }
  std::vector<Endpoints> edges;
  edges.reserve(g.size());
  for (const Endpoints& ep : g.edges()) {
    edges.push_back({out.vertex_map[ep.u], out.vertex_map[ep.v]});
  }
  out.graph = MultiGraph::build(next, edges);
  return out;
}

Subgraph extract(const MultiGraph& g, std::span<const VertexId> vertices,
                 std::span<const EdgeId> edges) {
  Subgraph out;
  out.from_parent_vertex.assign(g.order(), -1);
  out.from_parent_edge.assign(g.size(), -1);
  for (VertexId v : vertices) {
    out.from_parent_vertex[v] = static_cast<VertexId>(out.to_parent_vertex.size());
    out.to_parent_vertex.push_back(v);
  }
  std::vector<Endpoints> kept;
  for (EdgeId e : edges) {
    const Endpoints& ep = g.endpoints(e);
    VertexId u = out.from_parent_vertex[ep.u];
    VertexId v = out.from_parent_vertex[ep.v];
    require(u >= 0 && v >= 0, "extract: edge " + std::to_string(e) + " leaves the vertex set");
    out.from_parent_edge[e] = static_cast<EdgeId>(kept.size());
    out.to_parent_edge.push_back(e);
    kept.push_back({u, v});
  }
  out.graph = MultiGraph::build(static_cast<int>(vertices.size()), kept);
  return out;
}

}  // namespace oddtrail
