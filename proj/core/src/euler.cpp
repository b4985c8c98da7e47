#include "oddtrail/euler.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "unit_flow.hpp"

namespace oddtrail {

EdgeList Trail::edge_ids() const {
  EdgeList out;
  out.reserve(steps.size());
  for (const Step& s : steps) out.push_back(s.edge);
  std::sort(out.begin(), out.end());
  return out;
}

VertexList Trail::vertices() const {
  VertexList out = vertex_sequence();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> Trail::vertex_sequence() const {
  std::vector<VertexId> out{start};
  for (const Step& s : steps) out.push_back(s.to);
  return out;
}

bool is_trail(const MultiGraph& g, const Trail& t) {
  if (t.start < 0 || t.start >= g.order()) return false;
  std::vector<char> used(g.size(), 0);
  VertexId at = t.start;
  for (const Step& s : t.steps) {
    if (s.edge < 0 || s.edge >= g.size() || used[s.edge]) return false;
    used[s.edge] = 1;
    const Endpoints& ep = g.endpoints(s.edge);
    if (!((ep.u == at && ep.v == s.to) || (ep.v == at && ep.u == s.to))) return false;
    at = s.to;
  }
  return true;
}

bool is_path(const MultiGraph& g, const Trail& t) {
  if (!is_trail(g, t)) return false;
  std::vector<VertexId> seq = t.vertex_sequence();
  std::sort(seq.begin(), seq.end());
  return std::adjacent_find(seq.begin(), seq.end()) == seq.end();
}

bool is_circuit(const MultiGraph& g, const Trail& t) {
  if (!is_trail(g, t) || !t.closed()) return false;
  std::vector<VertexId> seq = t.vertex_sequence();
  seq.pop_back();
  std::sort(seq.begin(), seq.end());
  return std::adjacent_find(seq.begin(), seq.end()) == seq.end();
}

namespace {

std::vector<char> membership(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> member(g.size(), 0);
  for (EdgeId e : edges) {
    require(e >= 0 && e < g.size(), "edge id " + std::to_string(e) + " out of range");
    require(!member[e], "edge " + std::to_string(e) + " listed twice");
    member[e] = 1;
  }
  return member;
}

// Iterative Hierholzer over member edges, always taking the least unused edge.
Trail hierholzer(const MultiGraph& g, const std::vector<char>& member, VertexId start) {
  std::vector<std::size_t> next(g.order(), 0);
  std::vector<char> used(g.size(), 0);
  std::vector<std::pair<VertexId, EdgeId>> stack{{start, -1}};
  std::vector<std::pair<VertexId, EdgeId>> out;
  while (!stack.empty()) {
    auto [x, via] = stack.back();
    auto inc = g.incident(x);
    std::size_t& i = next[x];
    while (i < inc.size() && (!member[inc[i].edge] || used[inc[i].edge])) ++i;
    if (i < inc.size()) {
      used[inc[i].edge] = 1;
      stack.push_back({inc[i].other, inc[i].edge});
    } else {
      out.push_back({x, via});
      stack.pop_back();
    }
  }
  std::reverse(out.begin(), out.end());
  Trail t{out.front().first, {}};
  for (std::size_t k = 1; k < out.size(); ++k) t.steps.push_back({out[k].second, out[k].first});
  return t;
}

// Splits a closed trail into circuits at every repeated vertex.
void split_into_circuits(const Trail& closed, std::vector<Trail>& out) {
  std::vector<std::pair<VertexId, EdgeId>> stack{{closed.start, -1}};
  auto position = [&](VertexId v) -> int {
    for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i) {
      if (stack[i].first == v) return i;
    }
    return -1;
  };
  for (const Step& s : closed.steps) {
    int i = position(s.to);
    if (i < 0) {
      stack.push_back({s.to, s.edge});
      continue;
    }
    Trail c{s.to, {}};
    for (std::size_t k = i + 1; k < stack.size(); ++k) c.steps.push_back({stack[k].second, stack[k].first});
    c.steps.push_back({s.edge, s.to});
    stack.resize(i + 1);
    out.push_back(std::move(c));
  }
}

}  // namespace

Trail eulerian_trail(const MultiGraph& g, std::span<const EdgeId> edges, std::optional<VertexId> start) {
  std::vector<char> member = membership(g, edges);
  require(!edges.empty(), "eulerian_trail: no edges");
  ComponentSplit split = components(g, edges);
  require(split.components.size() == 1, "eulerian_trail: edge set is disconnected (" +
                                            std::to_string(split.components.size()) + " components)");
  VertexList odd = odd_vertices(g, edges);
  require(odd.size() <= 2, "eulerian_trail: " + std::to_string(odd.size()) + " odd-degree vertices");
  VertexId s = odd.empty() ? split.components.front().vertices.front() : odd.front();
  if (start) {
    if (odd.empty()) {
      require(std::binary_search(split.components.front().vertices.begin(),
                                 split.components.front().vertices.end(), *start),
              "eulerian_trail: start vertex not on the edge set");
    } else {
      require(*start == odd[0] || *start == odd[1], "eulerian_trail: open trail must start at an odd vertex");
    }
    s = *start;
  }
  return hierholzer(g, member, s);
}

Trail eulerian_trail(const MultiGraph& g) { return eulerian_trail(g, g.all_edges()); }

std::vector<Trail> circuit_decomposition(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> member = membership(g, edges);
  VertexList odd = odd_vertices(g, edges);
  require(odd.empty(), "circuit_decomposition: vertex " + (odd.empty() ? std::string() : std::to_string(odd.front())) +
                           " has odd degree");
  std::vector<Trail> out;
  for (const Component& comp : components(g, edges).components) {
    Trail closed = hierholzer(g, member, comp.vertices.front());
    split_into_circuits(closed, out);
  }
  return out;
}

std::vector<Trail> circuit_decomposition(const MultiGraph& g) {
  return circuit_decomposition(g, g.all_edges());
}

std::vector<Trail> circuit_decomposition_including(const MultiGraph& g, std::span<const Trail> required) {
  std::vector<int> owner(g.size(), -1);
  for (std::size_t i = 0; i < required.size(); ++i) {
    require(is_circuit(g, required[i]), "required trail " + std::to_string(i) + " is not a circuit");
    for (const Step& s : required[i].steps) {
      require(owner[s.edge] < 0, "required circuits " + std::to_string(owner[s.edge]) + " and " +
                                     std::to_string(i) + " share edge " + std::to_string(s.edge));
      owner[s.edge] = static_cast<int>(i);
    }
  }
  EdgeList rest;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (owner[e] < 0) rest.push_back(e);
  }
  std::vector<Trail> out(required.begin(), required.end());
  std::vector<Trail> tail = circuit_decomposition(g, rest);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<Trail> open_trail_decomposition(const MultiGraph& g, std::span<const EdgeId> edges) {
  membership(g, edges);
  require(!edges.empty() && is_connected(g, edges), "open_trail_decomposition: edge set must be connected");
  VertexList odd = odd_vertices(g, edges);
  require(!odd.empty(), "open_trail_decomposition: no odd vertices; use circuit_decomposition");

  // Pair consecutive odd vertices with auxiliary edges and cut an eulerian
  // circuit of the augmented graph at those edges.
  std::vector<Endpoints> aux;
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) aux.push_back({odd[i], odd[i + 1]});
  MultiGraph augmented = g.with_added_edges(aux);
  EdgeList all(edges.begin(), edges.end());
  for (std::size_t i = 0; i < aux.size(); ++i) all.push_back(g.size() + static_cast<EdgeId>(i));
  Trail circuit = eulerian_trail(augmented, all);

  auto is_aux = [&](EdgeId e) { return e >= g.size(); };
  std::size_t first = 0;
  while (!is_aux(circuit.steps[first].edge)) ++first;
  std::vector<Trail> out;
  const std::size_t m = circuit.steps.size();
  Trail cur{circuit.steps[first].to, {}};
  for (std::size_t k = 1; k <= m; ++k) {
    const Step& s = circuit.steps[(first + k) % m];
    if (is_aux(s.edge)) {
      out.push_back(std::move(cur));
      cur = Trail{s.to, {}};
    } else {
      cur.steps.push_back(s);
    }
  }
  return out;
}

std::vector<Trail> open_trail_decomposition(const MultiGraph& g) {
  return open_trail_decomposition(g, g.all_edges());
}

Path shortcut_to_path(const Trail& t) {
  Path p{t.start, {}};
  for (const Step& s : t.steps) {
    if (s.to == p.start) {
      p.steps.clear();
      continue;
    }
    auto it = std::find_if(p.steps.begin(), p.steps.end(), [&](const Step& q) { return q.to == s.to; });
    if (it != p.steps.end()) {
      p.steps.erase(it + 1, p.steps.end());
    } else {
      p.steps.push_back(s);
    }
  }
  return p;
}

std::vector<Path> disjoint_paths_covering_odd(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<Path> out;
  for (const Trail& t : open_trail_decomposition(g, edges)) out.push_back(shortcut_to_path(t));
  return out;
}

std::vector<Path> disjoint_paths_covering_odd(const MultiGraph& g) {
  return disjoint_paths_covering_odd(g, g.all_edges());
}

Fan fan(const MultiGraph& g, VertexId hub, std::span<const VertexId> targets) {
  require(hub >= 0 && hub < g.order(), "fan: hub out of range");
  for (VertexId t : targets) {
    require(t >= 0 && t < g.order(), "fan: target out of range");
    require(t != hub, "fan: target coincides with the hub");
  }
  const VertexId sink = g.order();
  std::vector<Endpoints> edges(g.edges().begin(), g.edges().end());
  for (VertexId t : targets) edges.push_back({sink, t});
  MultiGraph plus = MultiGraph::build(g.order() + 1, edges);

  const int k = static_cast<int>(targets.size());
  detail::UnitFlow flow(plus);
  int value = flow.run(hub, sink, k);
  require(value == k, "fan: only " + std::to_string(value) + " edge-disjoint paths, " + std::to_string(k) +
                          " requested");

  Fan out{hub, std::vector<Path>(k)};
  for (const Trail& walk : flow.decompose(hub, sink)) {
    Path p = shortcut_to_path(walk);
    const int index = p.steps.back().edge - g.size();
    p.steps.pop_back();
    out.spokes[index] = std::move(p);
  }
  return out;
}

std::vector<Path> paths_through_prescribed_edges(const MultiGraph& g, VertexId b,
                                                 std::span<const EdgeId> first_edges,
                                                 std::span<const VertexId> targets) {
  std::vector<char> in_target(g.order(), 0);
  for (VertexId y : targets) in_target[y] = 1;
  require(!targets.empty(), "paths_through_prescribed_edges: empty target set");
  require(!in_target[b], "paths_through_prescribed_edges: b lies in the target set");
  std::vector<char> prescribed(g.size(), 0);
  for (EdgeId e : first_edges) {
    const Endpoints& ep = g.endpoints(e);
    require((ep.u == b || ep.v == b) && !ep.is_loop(),
            "paths_through_prescribed_edges: edge " + std::to_string(e) + " is not a link at b");
    require(!prescribed[e], "paths_through_prescribed_edges: repeated first edge");
    prescribed[e] = 1;
  }

  const int k = static_cast<int>(first_edges.size());
  const VertexId sink = g.order();
  std::vector<Endpoints> edges(g.edges().begin(), g.edges().end());
  for (VertexId y : targets) {
    for (int i = 0; i < k; ++i) edges.push_back({y, sink});
  }
  MultiGraph plus = MultiGraph::build(g.order() + 1, edges);
  std::vector<char> usable(plus.size(), 1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Endpoints& ep = g.endpoints(e);
    if ((ep.u == b || ep.v == b) && !prescribed[e]) usable[e] = 0;
  }
  detail::UnitFlow flow(plus, usable);
  int value = flow.run(b, sink, k);
  require(value == k, "paths_through_prescribed_edges: flow " + std::to_string(value) + " < " + std::to_string(k));

  std::vector<Path> out(k);
  for (const Trail& walk : flow.decompose(b, sink)) {
    const EdgeId first = walk.steps.front().edge;
    Trail segment{walk.steps.front().to, {}};
    for (std::size_t i = 1; !in_target[segment.end()]; ++i) segment.steps.push_back(walk.steps[i]);
    auto slot = std::find(first_edges.begin(), first_edges.end(), first) - first_edges.begin();
    out[slot] = shortcut_to_path(segment);
  }
  return out;
}

void for_each_circuit(const MultiGraph& g, std::span<const EdgeId> edges,
                      const std::function<bool(const Trail&)>& visit) {
  std::vector<char> member = membership(g, edges);
  for (EdgeId e : edges) {
    if (g.endpoints(e).is_loop()) {
      if (!visit(Trail{g.endpoints(e).u, {{e, g.endpoints(e).u}}})) return;
    }
  }
  std::vector<char> on_path(g.order(), 0);
  bool stop = false;
  Trail cur;
  // Circuits are listed from their least vertex s, in the direction whose
  // first edge id is smaller than the closing edge id.
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId s, VertexId x) {
    for (const Incidence& inc : g.incident(x)) {
      if (stop) return;
      if (!member[inc.edge] || inc.other == x) continue;
      if (!cur.steps.empty() && inc.edge == cur.steps.back().edge) continue;
      if (inc.other == s) {
        if (!cur.steps.empty() && cur.steps.front().edge < inc.edge) {
          cur.steps.push_back({inc.edge, s});
          if (!visit(cur)) stop = true;
          cur.steps.pop_back();
        }
        continue;
      }
      if (inc.other < s || on_path[inc.other]) continue;
      on_path[inc.other] = 1;
      cur.steps.push_back({inc.edge, inc.other});
      dfs(s, inc.other);
      cur.steps.pop_back();
      on_path[inc.other] = 0;
    }
  };
  for (VertexId s = 0; s < g.order() && !stop; ++s) {
    cur = Trail{s, {}};
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
}

std::optional<Path> shortest_path(const MultiGraph& g, std::span<const EdgeId> edges, VertexId from,
                                  VertexId to) {
  std::vector<char> member = membership(g, edges);
  std::vector<EdgeId> via(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  std::queue<VertexId> q;
  seen[from] = 1;
  q.push(from);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    if (x == to) break;
    for (const Incidence& inc : g.incident(x)) {
      if (!member[inc.edge] || seen[inc.other]) continue;
      seen[inc.other] = 1;
      via[inc.other] = inc.edge;
      q.push(inc.other);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<Step> rev;
  for (VertexId y = to; y != from;) {
    rev.push_back({via[y], y});
    y = g.other_end(via[y], y);
  }
  std::reverse(rev.begin(), rev.end());
  return Path{from, std::move(rev)};
}

std::optional<Trail> circuit_from_edges(const MultiGraph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return std::nullopt;
  EdgeList sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  std::vector<int> deg = degrees_in(g, sorted);
  for (int d : deg) {
    if (d != 0 && d != 2) return std::nullopt;
  }
  if (!is_connected(g, sorted)) return std::nullopt;
  return eulerian_trail(g, sorted);
}

}  // namespace oddtrail
