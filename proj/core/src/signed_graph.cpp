#include "oddtrail/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace oddtrail {

SignedGraph SignedGraph::all_positive(MultiGraph g) {
  std::vector<int> sign(g.size(), 1);
  return {std::move(g), std::move(sign)};
}

SignedGraph SignedGraph::all_negative(MultiGraph g) {
  std::vector<int> sign(g.size(), -1);
  return {std::move(g), std::move(sign)};
}

int SignedGraph::negative_count() const {
  return static_cast<int>(std::count(sign.begin(), sign.end(), -1));
}

int SignedGraph::negative_count(std::span<const EdgeId> edges) const {
  int c = 0;
  for (EdgeId e : edges) c += sign[e] < 0;
  return c;
}

bool SignedGraph::valid() const {
  if (static_cast<int>(sign.size()) != graph.size()) return false;
  return std::all_of(sign.begin(), sign.end(), [](int s) { return s == 1 || s == -1; });
}

SignedGraph switch_at(const SignedGraph& g, std::span<const VertexId> vertices) {
  std::vector<char> in(g.graph.order(), 0);
  for (VertexId v : vertices) in[v] = 1;
  SignedGraph out = g;
  for (EdgeId e = 0; e < g.graph.size(); ++e) {
    const Endpoints& ep = g.graph.endpoints(e);
    if (in[ep.u] != in[ep.v]) out.sign[e] = -out.sign[e];
  }
  return out;
}

int sign_product(const SignedGraph& g, const Trail& t) {
  int p = 1;
  for (const Step& s : t.steps) p *= g.sign[s.edge];
  return p;
}

namespace {

struct Forest {
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;
  std::vector<int> potential;
  std::vector<char> tree_edge;
};

// BFS spanning forest of the member edges; roots are tried in `root_order`.
Forest spanning_forest(const SignedGraph& g, const std::vector<char>& member,
                       std::span<const VertexId> root_order) {
  const MultiGraph& mg = g.graph;
  Forest f{std::vector<VertexId>(mg.order(), -1), std::vector<EdgeId>(mg.order(), -1),
           std::vector<int>(mg.order(), -1), std::vector<int>(mg.order(), 1),
           std::vector<char>(mg.size(), 0)};
  for (VertexId r : root_order) {
    if (f.depth[r] >= 0) continue;
    f.depth[r] = 0;
    std::queue<VertexId> q;
    q.push(r);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (const Incidence& inc : mg.incident(x)) {
        if (!member[inc.edge] || f.depth[inc.other] >= 0) continue;
        f.depth[inc.other] = f.depth[x] + 1;
        f.parent[inc.other] = x;
        f.parent_edge[inc.other] = inc.edge;
        f.potential[inc.other] = f.potential[x] * g.sign[inc.edge];
        f.tree_edge[inc.edge] = 1;
        q.push(inc.other);
      }
    }
  }
  return f;
}

// Circuit closed by the non-tree edge e: from u up to the common ancestor,
// down to v, and back along e.
Trail fundamental_circuit(const MultiGraph& g, const Forest& f, EdgeId e) {
  const Endpoints& ep = g.endpoints(e);
  if (ep.is_loop()) return Trail{ep.u, {{e, ep.u}}};
  VertexId a = ep.u;
  VertexId b = ep.v;
  std::vector<Step> up;
  std::vector<Step> down;
  while (f.depth[a] > f.depth[b]) {
    up.push_back({f.parent_edge[a], f.parent[a]});
    a = f.parent[a];
  }
  while (f.depth[b] > f.depth[a]) {
    down.push_back({f.parent_edge[b], b});
    b = f.parent[b];
  }
  while (a != b) {
    up.push_back({f.parent_edge[a], f.parent[a]});
    a = f.parent[a];
    down.push_back({f.parent_edge[b], b});
    b = f.parent[b];
  }
  Trail t{ep.u, std::move(up)};
  t.steps.insert(t.steps.end(), down.rbegin(), down.rend());
  t.steps.push_back({e, ep.u});
  return t;
}

std::vector<char> member_mask(const SignedGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> member(g.graph.size(), 0);
  for (EdgeId e : edges) member[e] = 1;
  return member;
}

}  // namespace

BalanceCertificate is_balanced(const SignedGraph& g) { return is_balanced(g, g.graph.all_edges()); }

BalanceCertificate is_balanced(const SignedGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> member = member_mask(g, edges);
  VertexList roots(g.graph.order());
  for (VertexId v = 0; v < g.graph.order(); ++v) roots[v] = v;
  Forest f = spanning_forest(g, member, roots);
  EdgeList sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId e : sorted) {
    if (f.tree_edge[e]) continue;
    const Endpoints& ep = g.graph.endpoints(e);
    if (g.sign[e] != f.potential[ep.u] * f.potential[ep.v]) {
      return {false, {}, fundamental_circuit(g.graph, f, e)};
    }
  }
  return {true, f.potential, std::nullopt};
}

Parity negative_parity(const SignedGraph& g) {
  return g.negative_count() % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

std::optional<EdgeId> is_tightly_unbalanced(const SignedGraph& g) {
  require(!is_balanced(g).balanced, "is_tightly_unbalanced: graph is balanced");
  EdgeList all = g.graph.all_edges();
  for (EdgeId e = 0; e < g.graph.size(); ++e) {
    EdgeList rest = all;
    rest.erase(rest.begin() + e);
    if (is_balanced(g, rest).balanced) return e;
  }
  return std::nullopt;
}

std::optional<std::pair<Trail, Trail>> two_disjoint_unbalanced_circuits(const SignedGraph& g) {
  const MultiGraph& mg = g.graph;
  EdgeList all = mg.all_edges();
  if (is_balanced(g).balanced) return std::nullopt;
  // Deleting one edge cannot destroy two edge-disjoint unbalanced circuits.
  if (is_tightly_unbalanced(g)) return std::nullopt;

  auto complete = [&](const Trail& c) -> std::optional<std::pair<Trail, Trail>> {
    EdgeList rest = edge_difference(all, c.edge_ids());
    BalanceCertificate cert = is_balanced(g, rest);
    if (cert.balanced) return std::nullopt;
    return std::pair{c, *cert.witness};
  };

  std::vector<char> member(mg.size(), 1);
  for (VertexId r = 0; r < mg.order(); ++r) {
    VertexList order{r};
    for (VertexId v = 0; v < mg.order(); ++v) {
      if (v != r) order.push_back(v);
    }
    Forest f = spanning_forest(g, member, order);
    for (EdgeId e = 0; e < mg.size(); ++e) {
      if (f.tree_edge[e]) continue;
      const Endpoints& ep = mg.endpoints(e);
      if (g.sign[e] == f.potential[ep.u] * f.potential[ep.v]) continue;
      if (auto found = complete(fundamental_circuit(mg, f, e))) return found;
    }
  }

  std::optional<std::pair<Trail, Trail>> found;
  for_each_circuit(mg, all, [&](const Trail& c) {
    if (sign_product(g, c) > 0) return true;
    found = complete(c);
    return !found.has_value();
  });
  return found;
}

std::array<Trail, 3> three_disjoint_unbalanced_circuits(const SignedGraph& g, const Trail& first,
                                                        const Trail& second) {
  require(negative_parity(g) == Parity::kOdd, "three_disjoint_unbalanced_circuits: even number of negative edges");
  for (const Trail* c : {&first, &second}) {
    require(is_circuit(g.graph, *c), "three_disjoint_unbalanced_circuits: witness is not a circuit");
    require(sign_product(g, *c) < 0, "three_disjoint_unbalanced_circuits: witness is balanced");
  }
  EdgeList a = first.edge_ids();
  EdgeList b = second.edge_ids();
  EdgeList both = edge_union(a, b);
  require(both.size() == a.size() + b.size(), "three_disjoint_unbalanced_circuits: witnesses share an edge");

  // In an eulerian graph every such component is unbalanced; otherwise it
  // may not be, and the search can come up empty.
  const bool eulerian = odd_vertices(g.graph, g.graph.all_edges()).empty();
  EdgeList rest = edge_difference(g.graph.all_edges(), both);
  for (const Component& comp : components(g.graph, rest).components) {
    if (g.negative_count(comp.edges) % 2 == 0) continue;
    BalanceCertificate cert = is_balanced(g, comp.edges);
    if (!cert.balanced) return {first, second, *cert.witness};
    ensure(!eulerian, "odd eulerian component reported balanced");
  }
  ensure(!eulerian, "no component with an odd number of negative edges");
  fail(ErrorKind::kNotFound, "three_disjoint_unbalanced_circuits: no unbalanced component with odd negative count");
}

}  // namespace oddtrail
