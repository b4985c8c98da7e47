#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <string>

#include "decomposition_internal.hpp"
#include "oddtrail/decomposition.hpp"
#include "oddtrail/factorization.hpp"

namespace oddtrail {

namespace {

using detail::absorb;
using detail::check_rooted;

Decomposition bouquet(const MultiGraph& g) {
  ensure(g.order() == 1 && g.size() == 3, "single-vertex level is not a bouquet of three loops");
  return {{{0}, {1}, {2}}, 0};
}

Trail to_child(const SplitRecord& rec, const Trail& t) {
  Trail out{rec.parent_to_child_vertex[t.start], {}};
  ensure(out.start >= 0, "witness passes through the split vertex");
  for (const Step& s : t.steps) {
    Step c{rec.parent_to_child_edge[s.edge], rec.parent_to_child_vertex[s.to]};
    ensure(c.edge >= 0 && c.to >= 0, "witness passes through the split vertex");
    out.steps.push_back(c);
  }
  return out;
}

Trail circuit_of(const MultiGraph& g, const EdgeList& edges) {
  std::optional<Trail> c = circuit_from_edges(g, edges);
  ensure(c.has_value(), "component of the leftover edges is not a circuit");
  return *c;
}

// Rotates a circuit to start at v.
Trail rotate_to(const Trail& c, VertexId v) {
  std::vector<VertexId> seq = c.vertex_sequence();
  const int len = c.length();
  int at = -1;
  for (int i = 0; i < len; ++i) {
    if (seq[i] == v) at = i;
  }
  ensure(at >= 0, "vertex not on circuit");
  Trail out{v, {}};
  for (int i = 0; i < len; ++i) out.steps.push_back(c.steps[(at + i) % len]);
  return out;
}

class SignedSolver {
 public:
  explicit SignedSolver(const SolveObserver* obs) : obs_(obs) {}

  Decomposition solve(const SignedGraph& g, const Trail& c1, const Trail& c2) {
    const MultiGraph& mg = g.graph;
    if (mg.order() == 1) {
      Decomposition d = bouquet(mg);
      check_rooted(mg, d, 3, &g.sign, "bouquet");
      return d;
    }

    std::array<Trail, 3> c = three_disjoint_unbalanced_circuits(g, c1, c2);
    std::array<VertexList, 3> cv;
    for (int i = 0; i < 3; ++i) cv[i] = c[i].vertices();
    std::vector<unsigned> type(mg.order(), 0);
    for (int i = 0; i < 3; ++i) {
      for (VertexId v : cv[i]) type[v] |= 1u << i;
    }

    // A vertex on at most one circuit: split it, keeping two circuits away
    // from it as witnesses.
    for (VertexId v = 0; v < mg.order(); ++v) {
      if (std::popcount(type[v]) <= 1) return split_avoiding(g, v, c);
    }

    EdgeList used;
    for (const Trail& t : c) used = edge_union(used, t.edge_ids());
    const EdgeList h = edge_difference(mg.all_edges(), used);
    std::vector<EdgeList> h_comps;
    std::vector<EdgeList> unbalanced;
    for (const Component& comp : components(mg, h).components) {
      h_comps.push_back(comp.edges);
      if (g.negative_count(comp.edges) % 2 == 1) unbalanced.push_back(comp.edges);
    }

    std::vector<EdgeList> parts;
    std::vector<VertexList> anchors;
    for (int i = 0; i < 3; ++i) {
      parts.push_back(c[i].edge_ids());
      anchors.push_back(cv[i]);
    }

    for (VertexId v = 0; v < mg.order(); ++v) {
      if (type[v] != 7u) continue;
      if (unbalanced.empty()) {
        absorb(mg, parts, anchors, h_comps);
        return finish(g, std::move(parts), v);
      }
      ensure(unbalanced.size() >= 2, "odd number of unbalanced leftover circuits");
      return split(g, v, circuit_of(mg, unbalanced[0]), circuit_of(mg, unbalanced[1]));
    }

    // Every vertex now lies on exactly two of the circuits.
    if (unbalanced.size() >= 2) {
      const VertexId v = vertices_of(mg, unbalanced[0]).front();
      int away = 0;
      while (type[v] & (1u << away)) ++away;
      return split(g, v, c[away], circuit_of(mg, unbalanced[1]));
    }
    ensure(unbalanced.empty(), "odd number of unbalanced leftover circuits");

    // A leftover circuit meeting two vertex types {a,b} and {a,c}.
    for (std::size_t bi = 0; bi < h_comps.size(); ++bi) {
      VertexList bv = vertices_of(mg, h_comps[bi]);
      for (VertexId w : bv) {
        if (type[w] == type[bv.front()]) continue;
        const VertexId v = bv.front();
        const unsigned a_bit = type[v] & type[w];
        const int a = std::countr_zero(a_bit);
        const int b = std::countr_zero(type[v] & ~a_bit);
        const int cc = std::countr_zero(type[w] & ~a_bit);
        std::vector<EdgeList> seeded{parts[a], parts[b], edge_union(parts[cc], h_comps[bi])};
        std::vector<VertexList> seeded_anchors{anchors[a], anchors[b], vertices_of(mg, seeded[2])};
        std::vector<EdgeList> rest = h_comps;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(bi));
        absorb(mg, seeded, seeded_anchors, rest);
        return finish(g, std::move(seeded), v);
      }
    }

    // Every leftover circuit is monotype. Reroute one circuit through a
    // leftover edge so that some vertex drops to a single circuit.
    std::vector<char> in_h(mg.size(), 0);
    for (EdgeId e : h) in_h[e] = 1;
    for (VertexId v = 0; v < mg.order(); ++v) {
      for (const Incidence& inc : mg.incident(v)) {
        if (!in_h[inc.edge] || inc.other == v) continue;
        const EdgeId e = inc.edge;
        const VertexId w = inc.other;
        for (int a = 0; a < 3; ++a) {
          if (!(type[v] & (1u << a))) continue;
          Trail rot = rotate_to(c[a], v);
          std::vector<VertexId> seq = rot.vertex_sequence();
          const int len = rot.length();
          int p = 1;
          while (p < len && seq[p] != w) ++p;
          if (p == len) continue;
          Trail first{v, {rot.steps.begin(), rot.steps.begin() + p}};
          Trail second{w, {rot.steps.begin() + p, rot.steps.end()}};
          const bool first_odd = (g.negative_count(first.edge_ids()) + (g.sign[e] < 0)) % 2 == 1;
          Trail kept = first_odd ? first : second;
          const Trail& dropped = first_odd ? second : first;
          if (dropped.length() < 2) continue;
          kept.steps.push_back({e, kept.start});
          VertexList inner = dropped.vertices();
          inner.erase(std::remove_if(inner.begin(), inner.end(), [&](VertexId x) { return x == v || x == w; }),
                      inner.end());
          const VertexId u = inner.front();
          std::array<Trail, 3> next = c;
          next[a] = kept;
          ensure(is_circuit(mg, kept) && sign_product(g, kept) < 0, "rerouted circuit is not unbalanced");
          return split_avoiding(g, u, next);
        }
      }
    }
    fail(ErrorKind::kTheoremViolation, "no reducible configuration among three unbalanced circuits");
  }

 private:
  Decomposition finish(const SignedGraph& g, std::vector<EdgeList> parts, VertexId root) {
    Decomposition d{std::move(parts), root};
    check_rooted(g.graph, d, 3, &g.sign, "signed level");
    return d;
  }

  Decomposition split_avoiding(const SignedGraph& g, VertexId v, const std::array<Trail, 3>& c) {
    std::vector<const Trail*> away;
    for (const Trail& t : c) {
      VertexList vs = t.vertices();
      if (!std::binary_search(vs.begin(), vs.end(), v)) away.push_back(&t);
    }
    ensure(away.size() >= 2, "fewer than two circuits avoid the split vertex");
    return split(g, v, *away[0], *away[1]);
  }

  Decomposition split(const SignedGraph& g, VertexId v, const Trail& w1, const Trail& w2) {
    SplitRecord rec = split_off(g, v);
    Decomposition child = solve(rec.child, to_child(rec, w1), to_child(rec, w2));
    Decomposition lifted = lift(rec, child);
    check_rooted(g.graph, lifted, 3, &g.sign, "lifted split");
    if (obs_ && obs_->on_split) obs_->on_split(SplitEvent{g, rec, child, lifted});
    return lifted;
  }

  const SolveObserver* obs_;
};

// --- 2- and 4-edge-cuts --------------------------------------------------------

struct CutSides {
  VertexList h;  // side handled here
  VertexList k;  // side kept in the child
  EdgeList h_edges;
  EdgeList k_edges;
  EdgeList s;                // cut edges, ascending
  std::vector<VertexId> a;   // end of s[i] in h
  std::vector<VertexId> b;   // end of s[i] in k
};

CutSides sides_of(const MultiGraph& g, const Cut& cut, bool h_is_odd_order) {
  VertexList other;
  for (VertexId v = 0, i = 0; v < g.order(); ++v) {
    if (i < static_cast<VertexId>(cut.side.size()) && cut.side[i] == v) {
      ++i;
    } else {
      other.push_back(v);
    }
  }
  CutSides cs;
  const bool side_odd = cut.side.size() % 2 == 1;
  cs.h = side_odd == h_is_odd_order ? cut.side : other;
  cs.k = side_odd == h_is_odd_order ? other : cut.side;
  cs.h_edges = induced_edges(g, cs.h);
  cs.k_edges = induced_edges(g, cs.k);
  cs.s = cut.edges;
  std::sort(cs.s.begin(), cs.s.end());
  for (EdgeId e : cs.s) {
    const Endpoints& ep = g.endpoints(e);
    const bool u_in_h = std::binary_search(cs.h.begin(), cs.h.end(), ep.u);
    cs.a.push_back(u_in_h ? ep.u : ep.v);
    cs.b.push_back(u_in_h ? ep.v : ep.u);
  }
  return cs;
}

// The even side of a 4-edge-cut split into two pieces, piece t joining cut
// edges pairs[t] through H as a trail between their ends.
struct EvenSide {
  std::array<std::pair<int, int>, 2> pairs{};
  std::array<EdgeList, 2> pieces;
};

EvenSide bipartite_side(const MultiGraph& g, const CutSides& cs) {
  auto colour = bipartition(g, cs.h_edges);
  ensure(colour.has_value(), "bipartite side lost its bipartition");
  std::vector<int> left;
  std::vector<int> right;
  for (int i = 0; i < 4; ++i) {
    const bool in_first = std::binary_search(colour->first.begin(), colour->first.end(), cs.a[i]);
    (in_first ? left : right).push_back(i);
  }
  ensure(left.size() == 2, "cut edges do not meet both colour classes twice");

  // Two edge-disjoint paths from the left ends to the right ends: a fan from
  // an extra hub joined to both left ends.
  const VertexId hub = g.order();
  std::vector<Endpoints> edges;
  for (EdgeId e : cs.h_edges) edges.push_back(g.endpoints(e));
  edges.push_back({hub, cs.a[left[0]]});
  edges.push_back({hub, cs.a[left[1]]});
  MultiGraph aux = MultiGraph::build(g.order() + 1, edges);
  std::array<VertexId, 2> targets{cs.a[right[0]], cs.a[right[1]]};
  Fan f = fan(aux, hub, targets);

  EvenSide out;
  std::array<VertexList, 2> anchors;
  const int hn = static_cast<int>(cs.h_edges.size());
  EdgeList used;
  for (int t = 0; t < 2; ++t) {
    const Path& spoke = f.spokes[t];
    const int from = left[spoke.steps.front().edge - hn];
    out.pairs[t] = {std::min(from, right[t]), std::max(from, right[t])};
    for (std::size_t i = 1; i < spoke.steps.size(); ++i) out.pieces[t].push_back(cs.h_edges[spoke.steps[i].edge]);
    std::sort(out.pieces[t].begin(), out.pieces[t].end());
    anchors[t] = vertices_of(g, out.pieces[t]);
    used = edge_union(used, out.pieces[t]);
  }
  std::vector<EdgeList> parts{out.pieces[0], out.pieces[1]};
  std::vector<VertexList> anchor_list{anchors[0], anchors[1]};
  std::vector<EdgeList> rest;
  for (const Component& comp : components(g, edge_difference(cs.h_edges, used)).components) rest.push_back(comp.edges);
  absorb(g, parts, anchor_list, rest);
  out.pieces = {parts[0], parts[1]};
  return out;
}

// Splits B_Y = H - Y into two trails through the cut: paths from the cut
// edges into V(Y), linked up in pairs inside B_Y, with the remaining
// eulerian pieces attached.
EvenSide link_through(const MultiGraph& g, const CutSides& cs, const EdgeList& y) {
  const EdgeList b_y = edge_difference(cs.h_edges, y);
  Contraction con = contract(g, cs.k);
  std::vector<VertexId> back(con.graph.order(), -1);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!std::binary_search(cs.k.begin(), cs.k.end(), v)) back[con.vertex_map[v]] = v;
  }
  VertexList targets;
  for (VertexId v : vertices_of(g, y)) targets.push_back(con.vertex_map[v]);
  std::vector<Path> segs = paths_through_prescribed_edges(con.graph, con.block_vertex, cs.s, targets);

  std::array<Trail, 4> seg;
  std::array<VertexId, 4> ends{};
  EdgeList seg_edges;
  for (int i = 0; i < 4; ++i) {
    seg[i].start = back[segs[i].start];
    for (const Step& st : segs[i].steps) seg[i].steps.push_back({st.edge, back[st.to]});
    ensure(seg[i].start == cs.a[i], "segment does not start at its cut edge");
    ends[i] = seg[i].end();
    EdgeList ids = seg[i].edge_ids();
    seg_edges = edge_union(seg_edges, ids);
  }
  ensure(std::includes(b_y.begin(), b_y.end(), seg_edges.begin(), seg_edges.end()), "segment leaves B_Y");
  const EdgeList b1 = edge_difference(b_y, seg_edges);

  // Pair up the segment ends, joining the odd ones by paths inside B'.
  std::array<char, 4> paired{};
  std::vector<std::pair<int, int>> pairs;
  std::vector<EdgeList> middles;
  auto take = [&](VertexId x) {
    for (int i = 0; i < 4; ++i) {
      if (!paired[i] && ends[i] == x) {
        paired[i] = 1;
        return i;
      }
    }
    fail(ErrorKind::kTheoremViolation, "odd vertex of B' is not a segment end");
  };
  for (const Component& comp : components(g, b1).components) {
    if (odd_vertices(g, comp.edges).empty()) continue;
    for (const Path& p : disjoint_paths_covering_odd(g, comp.edges)) {
      int i = take(p.start);
      int j = take(p.end());
      pairs.push_back({i, j});
      middles.push_back(p.edge_ids());
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (paired[i]) continue;
    paired[i] = 1;
    int j = take(ends[i]);
    pairs.push_back({i, j});
    middles.push_back({});
  }
  ensure(pairs.size() == 2, "segment ends do not pair up");

  EvenSide out;
  std::vector<EdgeList> parts;
  std::vector<VertexList> anchors;
  EdgeList used;
  for (int t = 0; t < 2; ++t) {
    auto [i, j] = pairs[t];
    EdgeList piece = edge_union(edge_union(seg[i].edge_ids(), middles[t]), seg[j].edge_ids());
    VertexList anchor = vertices_of(g, piece);
    for (VertexId x : {cs.a[i], cs.a[j], ends[i], ends[j]}) {
      anchor.insert(std::upper_bound(anchor.begin(), anchor.end(), x), x);
    }
    anchor.erase(std::unique(anchor.begin(), anchor.end()), anchor.end());
    used = edge_union(used, piece);
    out.pairs[t] = {std::min(i, j), std::max(i, j)};
    parts.push_back(std::move(piece));
    anchors.push_back(std::move(anchor));
  }
  std::vector<EdgeList> rest;
  for (const Component& comp : components(g, edge_difference(b_y, used)).components) rest.push_back(comp.edges);
  absorb(g, parts, anchors, rest);
  out.pieces = {parts[0], parts[1]};
  // Y joins whichever piece is still even.
  const int even = out.pieces[0].size() % 2 == 0 ? 0 : 1;
  ensure(out.pieces[1 - even].size() % 2 == 1, "B_Y pieces have the wrong parity");
  out.pieces[even] = edge_union(out.pieces[even], y);
  return out;
}

EvenSide non_bipartite_side(const MultiGraph& g, const CutSides& cs) {
  EdgeList c = detail::find_odd_circuit(g, cs.h_edges);
  ensure(!c.empty(), "non-bipartite side has no odd circuit");
  c = detail::grow_odd_eulerian(g, cs.h_edges, c);
  EdgeList b;
  EdgeList d;
  for (const Component& comp : components(g, edge_difference(cs.h_edges, c)).components) {
    const bool touches_a = std::any_of(cs.a.begin(), cs.a.end(), [&](VertexId x) {
      return std::binary_search(comp.vertices.begin(), comp.vertices.end(), x);
    });
    (touches_a ? b : d) = edge_union(touches_a ? b : d, comp.edges);
  }
  if (b.size() % 2 == 0) {
    ensure(!d.empty() && d.size() % 2 == 1, "even B without an odd leftover component");
    return link_through(g, cs, d);
  }
  ensure(d.empty(), "odd B with leftover components");
  return link_through(g, cs, c);
}

class UnsignedSolver {
 public:
  explicit UnsignedSolver(const SolveObserver* obs) : obs_(obs), signed_(obs) {}

  Decomposition solve(const MultiGraph& g) {
    if (g.order() == 1) return bouquet(g);
    const int lambda = edge_connectivity(g);
    if (obs_ && obs_->on_level) obs_->on_level(lambda, g.order());
    Decomposition d;
    if (lambda >= 6) {
      std::vector<Trail> w = odd_circuit_witnesses(g);
      ensure(w.size() >= 2, "2-factorization gave fewer than two odd circuits");
      d = signed_.solve(SignedGraph::all_negative(g), w[0], w[1]);
    } else if (lambda == 2) {
      d = two_cut(g);
    } else if (lambda == 4) {
      d = four_cut(g);
    } else {
      fail(ErrorKind::kTheoremViolation, "unexpected edge-connectivity " + std::to_string(lambda));
    }
    check_rooted(g, d, 3, nullptr, "unsigned level");
    return d;
  }

 private:
  Decomposition two_cut(const MultiGraph& g) {
    std::optional<Cut> cut = min_cut(g, 2);
    ensure(cut && cut->edges.size() == 2, "no 2-edge-cut at connectivity 2");
    CutSides cs = sides_of(g, *cut, true);
    ensure(cs.k_edges.size() % 2 == 1, "even side of a 2-edge-cut has an even edge count");
    Subgraph sub = extract(g, cs.h, cs.h_edges);
    Endpoints extra{sub.from_parent_vertex[cs.a[0]], sub.from_parent_vertex[cs.a[1]]};
    MultiGraph child = sub.graph.with_added_edges(std::span(&extra, 1));
    detail::Reduction r{sub.to_parent_vertex, {}};
    for (EdgeId e : sub.to_parent_edge) r.expansion.push_back({e});
    r.expansion.push_back(edge_union(cs.s, cs.k_edges));
    return detail::lift_through(r, solve(child));
  }

  Decomposition four_cut(const MultiGraph& g) {
    std::optional<Cut> cut = min_cut(g, 4);
    ensure(cut && cut->edges.size() == 4, "no 4-edge-cut at connectivity 4");
    // The even-order side has an even number of edges and is decomposed here.
    CutSides cs = sides_of(g, *cut, false);
    ensure(cs.h_edges.size() % 2 == 0, "4-edge-cut side has an odd edge count");
    const bool bip = bipartition(g, cs.h_edges).has_value();
    EvenSide even = bip ? bipartite_side(g, cs) : non_bipartite_side(g, cs);

    EdgeList covered;
    for (int t = 0; t < 2; ++t) {
      auto [i, j] = even.pairs[t];
      const EdgeList& piece = even.pieces[t];
      ensure(piece.size() % 2 == 1, "cut piece has an even edge count");
      VertexList odd = odd_vertices(g, piece);
      VertexList want{cs.a[i], cs.a[j]};
      if (want[0] == want[1]) want.clear();
      std::sort(want.begin(), want.end());
      ensure(odd == want && (piece.empty() || is_connected(g, piece)), "cut piece is not a trail between its ends");
      covered = edge_union(covered, piece);
    }
    ensure(covered == cs.h_edges, "cut pieces do not cover the even side");

    Subgraph sub = extract(g, cs.k, cs.k_edges);
    std::array<Endpoints, 2> extra;
    for (int t = 0; t < 2; ++t) {
      extra[t] = {sub.from_parent_vertex[cs.b[even.pairs[t].first]], sub.from_parent_vertex[cs.b[even.pairs[t].second]]};
    }
    MultiGraph child = sub.graph.with_added_edges(extra);
    detail::Reduction r{sub.to_parent_vertex, {}};
    for (EdgeId e : sub.to_parent_edge) r.expansion.push_back({e});
    for (int t = 0; t < 2; ++t) {
      EdgeList ends{cs.s[even.pairs[t].first], cs.s[even.pairs[t].second]};
      r.expansion.push_back(edge_union(ends, even.pieces[t]));
    }
    return detail::lift_through(r, solve(child));
  }

  const SolveObserver* obs_;
  SignedSolver signed_;
};

}  // namespace

Decomposition signed_rooted_3_odd(const SignedGraph& g, std::optional<std::pair<Trail, Trail>> witnesses,
                                  const SolveObserver* observer) {
  const MultiGraph& mg = g.graph;
  require(g.valid(), "signed_rooted_3_odd: invalid signature");
  require(mg.order() >= 1 && mg.is_regular(6), "signed_rooted_3_odd: graph is not 6-regular");
  require(edge_connectivity(mg) >= 6, "signed_rooted_3_odd: graph is not 6-edge-connected");
  require(negative_parity(g) == Parity::kOdd, "signed_rooted_3_odd: even number of negative edges");
  if (!witnesses) {
    witnesses = two_disjoint_unbalanced_circuits(g);
    if (!witnesses) {
      fail(ErrorKind::kNotFound, "signed_rooted_3_odd: no two edge-disjoint unbalanced circuits");
    }
  }
  for (const Trail* t : {&witnesses->first, &witnesses->second}) {
    require(is_circuit(mg, *t) && sign_product(g, *t) < 0, "signed_rooted_3_odd: witness is not an unbalanced circuit");
  }
  SignedSolver solver(observer);
  return solver.solve(g, witnesses->first, witnesses->second);
}

Decomposition rooted_3_odd(const MultiGraph& g, const SolveObserver* observer) {
  require(g.order() >= 1 && g.is_regular(6), "rooted_3_odd: graph is not 6-regular");
  require(g.order() % 2 == 1, "rooted_3_odd: graph has even order");
  require(is_connected(g), "rooted_3_odd: graph is not connected");
  UnsignedSolver solver(observer);
  return solver.solve(g);
}

}  // namespace oddtrail
