#include "oddtrail/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <queue>
#include <string>

#include "decomposition_internal.hpp"
#include "oddtrail/factorization.hpp"
#include "oddtrail/verify.hpp"

namespace oddtrail {

namespace detail {

Decomposition lift_through(const Reduction& r, const Decomposition& child) {
  Decomposition out;
  for (const EdgeList& part : child.parts) {
    EdgeList p;
    for (EdgeId e : part) p.insert(p.end(), r.expansion[e].begin(), r.expansion[e].end());
    std::sort(p.begin(), p.end());
    out.parts.push_back(std::move(p));
  }
  if (child.root) out.root = r.child_to_parent_vertex[*child.root];
  return out;
}

EdgeList find_odd_circuit(const MultiGraph& g, const EdgeList& edges) {
  SignedGraph neg = SignedGraph::all_negative(g);
  BalanceCertificate cert = is_balanced(neg, edges);
  if (cert.balanced) return {};
  return cert.witness->edge_ids();
}

EdgeList grow_odd_eulerian(const MultiGraph& g, const EdgeList& universe, EdgeList odd) {
  for (;;) {
    EdgeList rest = edge_difference(universe, odd);
    std::vector<const Component*> odd_comps;
    ComponentSplit split = components(g, rest);
    const Component* even = nullptr;
    for (const Component& c : split.components) {
      if (!odd_vertices(g, c.edges).empty()) continue;
      if (c.edges.size() % 2 == 0) {
        even = &c;
        break;
      }
      odd_comps.push_back(&c);
    }
    if (even) {
      odd = edge_union(odd, even->edges);
    } else if (odd_comps.size() >= 2) {
      odd = edge_union(odd, odd_comps[0]->edges);
      odd = edge_union(odd, odd_comps[1]->edges);
    } else {
      return odd;
    }
  }
}

void absorb(const MultiGraph& g, std::vector<EdgeList>& parts, std::vector<VertexList>& anchors,
            std::vector<EdgeList> pending) {
  std::sort(pending.begin(), pending.end(),
            [](const EdgeList& a, const EdgeList& b) { return a.front() < b.front(); });
  while (!pending.empty()) {
    bool progress = false;
    for (std::size_t i = 0; i < pending.size() && !progress; ++i) {
      VertexList vs = vertices_of(g, pending[i]);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (!share_vertex(anchors[j], vs)) continue;
        parts[j] = edge_union(parts[j], pending[i]);
        VertexList merged;
        std::set_union(anchors[j].begin(), anchors[j].end(), vs.begin(), vs.end(), std::back_inserter(merged));
        anchors[j] = std::move(merged);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
        progress = true;
        break;
      }
    }
    ensure(progress, "leftover piece touches no part");
  }
}

void check_rooted(const MultiGraph& g, const Decomposition& d, int parts, const std::vector<int>* sign,
                  const char* where) {
  const std::string w = where;
  ensure(static_cast<int>(d.parts.size()) == parts, w + ": wrong number of parts");
  EdgeList all;
  for (const EdgeList& p : d.parts) {
    ensure(!p.empty() && is_eulerian_subgraph(g, p) && is_connected(g, p), w + ": part is not a closed trail");
    int count = 0;
    for (EdgeId e : p) count += sign ? (*sign)[e] < 0 : 1;
    ensure(count % 2 == 1, w + ": part has even parity");
    if (d.root) {
      VertexList vs = vertices_of(g, p);
      ensure(std::binary_search(vs.begin(), vs.end(), *d.root), w + ": part misses the root");
    }
    all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  ensure(all == g.all_edges(), w + ": parts do not partition the edges");
}

}  // namespace detail

namespace {

void require_eulerian(const MultiGraph& g, const char* who) {
  const std::string w = who;
  require(g.size() > 0, w + ": graph has no edges");
  require(components(g).components.size() == 1, w + ": graph is not connected");
  VertexList odd = odd_vertices(g, g.all_edges());
  require(odd.empty(), w + ": vertex " + (odd.empty() ? std::string() : std::to_string(odd.front())) +
                           " has odd degree");
}

bool odd_circuits_ok(const MultiGraph& g, const std::vector<Trail>& circuits) {
  EdgeList used;
  for (const Trail& c : circuits) {
    if (!is_circuit(g, c) || c.length() % 2 == 0) return false;
    EdgeList ids = c.edge_ids();
    EdgeList merged = edge_union(used, ids);
    if (merged.size() != used.size() + ids.size()) return false;
    used = std::move(merged);
  }
  return true;
}

// k edge-disjoint odd circuits: from a 2-factorization when available, then
// greedily, then by backtracking over all odd circuits.
std::vector<Trail> find_odd_circuits(const MultiGraph& g, int k) {
  if (g.order() % 2 == 1 && g.degree(0) % 2 == 0 && g.is_regular(g.degree(0))) {
    std::vector<Trail> w = odd_circuit_witnesses(g);
    if (static_cast<int>(w.size()) >= k) {
      w.resize(k);
      return w;
    }
  }

  SignedGraph neg = SignedGraph::all_negative(g);
  std::vector<Trail> greedy;
  EdgeList rest = g.all_edges();
  while (static_cast<int>(greedy.size()) < k) {
    BalanceCertificate cert = is_balanced(neg, rest);
    if (cert.balanced) break;
    rest = edge_difference(rest, cert.witness->edge_ids());
    greedy.push_back(*cert.witness);
  }
  if (static_cast<int>(greedy.size()) == k) return greedy;

  constexpr std::size_t kCircuitCap = 200000;
  std::vector<Trail> odd;
  for_each_circuit(g, g.all_edges(), [&](const Trail& c) {
    if (c.length() % 2 == 1) odd.push_back(c);
    return odd.size() < kCircuitCap;
  });
  if (odd.size() >= kCircuitCap) fail(ErrorKind::kBoundExceeded, "k_odd: too many circuits to search");

  std::vector<EdgeList> ids;
  for (const Trail& c : odd) ids.push_back(c.edge_ids());
  std::vector<char> used(g.size(), 0);
  std::vector<int> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (std::size_t i = from; i < odd.size(); ++i) {
      if (std::any_of(ids[i].begin(), ids[i].end(), [&](EdgeId e) { return used[e]; })) continue;
      for (EdgeId e : ids[i]) used[e] = 1;
      chosen.push_back(static_cast<int>(i));
      if (search(i + 1)) return true;
      chosen.pop_back();
      for (EdgeId e : ids[i]) used[e] = 0;
    }
    return false;
  };
  if (!search(0)) {
    fail(ErrorKind::kNotFound, "k_odd: insufficient odd circuits (fewer than " + std::to_string(k) +
                                   " edge-disjoint)");
  }
  std::vector<Trail> out;
  for (int i : chosen) out.push_back(odd[i]);
  return out;
}

}  // namespace

Decomposition k_odd(const MultiGraph& g, int k, const std::vector<Trail>* witnesses) {
  require_eulerian(g, "k_odd");
  require(k >= 1, "k_odd: k must be positive");
  require(g.size() % 2 == k % 2, "k_odd: edge count " + std::to_string(g.size()) + " and k = " +
                                     std::to_string(k) + " differ in parity");

  std::vector<Trail> odd;
  if (witnesses) {
    require(static_cast<int>(witnesses->size()) >= k, "k_odd: fewer than k witnesses");
    require(odd_circuits_ok(g, *witnesses), "k_odd: witnesses are not edge-disjoint odd circuits");
    odd.assign(witnesses->begin(), witnesses->begin() + k);
  } else {
    odd = find_odd_circuits(g, k);
  }

  std::vector<Trail> circuits = circuit_decomposition_including(g, odd);
  const int m = static_cast<int>(circuits.size());
  std::vector<VertexList> verts;
  for (const Trail& c : circuits) verts.push_back(c.vertices());

  // Spanning tree of the intersection graph of the circuits.
  std::vector<Endpoints> tree_edges;
  std::vector<char> seen(m, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < m; ++j) {
      if (seen[j] || !share_vertex(verts[i], verts[j])) continue;
      seen[j] = 1;
      tree_edges.push_back({i, j});
      q.push(j);
    }
  }
  ensure(static_cast<int>(tree_edges.size()) == m - 1, "circuit intersection graph is disconnected");

  TreePartitionInstance inst{MultiGraph::build(m, tree_edges), {}, k};
  for (int i = 0; i < m; ++i) {
    if (circuits[i].length() % 2 == 1) inst.distinguished.push_back(i);
  }
  Decomposition out;
  for (const VertexList& cls : tree_partition(inst)) {
    EdgeList part;
    for (int i : cls) part = edge_union(part, circuits[i].edge_ids());
    out.parts.push_back(std::move(part));
  }
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

Rooted2Result rooted_2_odd(const MultiGraph& g) {
  require_eulerian(g, "rooted_2_odd");
  if (g.size() % 2 == 1) return {std::nullopt, "odd edge count"};
  const EdgeList all = g.all_edges();
  EdgeList c = detail::find_odd_circuit(g, all);
  if (c.empty()) return {std::nullopt, "bipartite"};

  c = detail::grow_odd_eulerian(g, all, c);
  EdgeList r = edge_difference(all, c);
  ensure(r.size() % 2 == 1 && is_eulerian_subgraph(g, r) && is_connected(g, r),
         "rooted_2_odd: remainder is not a single odd eulerian piece");
  VertexList vc = vertices_of(g, c);
  VertexList vr = vertices_of(g, r);
  VertexList common;
  std::set_intersection(vc.begin(), vc.end(), vr.begin(), vr.end(), std::back_inserter(common));
  ensure(!common.empty(), "rooted_2_odd: parts share no vertex");

  Decomposition d{{c, r}, common.front()};
  std::sort(d.parts.begin(), d.parts.end());
  return {d, ""};
}

SplitRecord split_off(const SignedGraph& g, VertexId v) {
  const MultiGraph& mg = g.graph;
  require(g.valid(), "split_off: invalid signature");
  require(mg.order() >= 2, "split_off: graph has a single vertex");
  require(v >= 0 && v < mg.order(), "split_off: vertex out of range");
  require(mg.is_regular(6), "split_off: graph is not 6-regular");
  for (const Incidence& inc : mg.incident(v)) {
    require(inc.other != v, "split_off: loop at the split vertex");
  }
  require(edge_connectivity(mg) >= 6, "split_off: graph is not 6-edge-connected");

  std::array<EdgeId, 6> at{};
  for (int i = 0; i < 6; ++i) at[i] = mg.incident(v)[i].edge;

  SplitRecord rec;
  rec.vertex = v;
  rec.parent_to_child_vertex.assign(mg.order(), -1);
  for (VertexId x = 0; x < mg.order(); ++x) {
    if (x == v) continue;
    rec.parent_to_child_vertex[x] = static_cast<VertexId>(rec.child_to_parent_vertex.size());
    rec.child_to_parent_vertex.push_back(x);
  }
  std::vector<Endpoints> kept;
  std::vector<int> kept_sign;
  rec.parent_to_child_edge.assign(mg.size(), -1);
  for (EdgeId e = 0; e < mg.size(); ++e) {
    const Endpoints& ep = mg.endpoints(e);
    if (ep.u == v || ep.v == v) continue;
    rec.parent_to_child_edge[e] = static_cast<EdgeId>(kept.size());
    kept.push_back({rec.parent_to_child_vertex[ep.u], rec.parent_to_child_vertex[ep.v]});
    kept_sign.push_back(g.sign[e]);
    rec.child_edge_origin.push_back({e});
  }

  // The 15 perfect matchings of the six edge-ends, in lexicographic order.
  std::vector<std::array<std::pair<int, int>, 3>> pairings;
  for (int a = 1; a < 6; ++a) {
    int rest[4];
    int n = 0;
    for (int i = 1; i < 6; ++i) {
      if (i != a) rest[n++] = i;
    }
    for (int b = 1; b < 4; ++b) {
      int c0 = b == 1 ? 2 : 1;
      int c1 = 6 - b - c0;
      pairings.push_back({{{0, a}, {rest[0], rest[b]}, {rest[c0], rest[c1]}}});
    }
  }

  for (const auto& p : pairings) {
    std::vector<Endpoints> edges = kept;
    std::vector<int> sign = kept_sign;
    for (const auto& [i, j] : p) {
      edges.push_back({rec.parent_to_child_vertex[mg.other_end(at[i], v)],
                       rec.parent_to_child_vertex[mg.other_end(at[j], v)]});
      sign.push_back(g.sign[at[i]] * g.sign[at[j]]);
    }
    MultiGraph child = MultiGraph::build(mg.order() - 1, edges);
    if (child.order() > 1 && edge_connectivity(child) < 6) continue;
    if (child.order() == 1 && child.size() != 3) continue;
    rec.child = {std::move(child), std::move(sign)};
    for (int t = 0; t < 3; ++t) {
      rec.pairing[t] = {at[p[t].first], at[p[t].second]};
      EdgeList origin{at[p[t].first], at[p[t].second]};
      std::sort(origin.begin(), origin.end());
      rec.child_edge_origin.push_back(std::move(origin));
    }
    ensure(rec.child.graph.is_regular(6), "split_off: child is not 6-regular");
    ensure(negative_parity(rec.child) == negative_parity(g), "split_off: parity changed");
    return rec;
  }
  fail(ErrorKind::kTheoremViolation, "split_off: no pairing keeps 6-edge-connectivity at vertex " +
                                         std::to_string(v));
}

Decomposition lift(const SplitRecord& rec, const Decomposition& child_dec) {
  Expectation e;
  e.rooted = true;
  Certificate c = verify_decomposition(rec.child.graph, child_dec, e);
  require(c.pass, "lift: invalid child decomposition: " + (c.pass ? std::string() : c.violations.front().detail));
  detail::Reduction r{rec.child_to_parent_vertex, rec.child_edge_origin};
  return detail::lift_through(r, child_dec);
}

}  // namespace oddtrail
