#include "oddtrail/factorization.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace oddtrail {

namespace {

int regular_degree(const MultiGraph& g) {
  require(g.order() > 0, "two_factorization: empty graph");
  const int d = g.degree(0);
  for (VertexId v = 0; v < g.order(); ++v) {
    require(g.degree(v) == d, "two_factorization: vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)) + ", expected " + std::to_string(d));
  }
  require(d % 2 == 0, "two_factorization: vertex 0 has odd degree " + std::to_string(d));
  return d;
}

// Kuhn's augmenting-path matching on the bipartite out/in graph restricted to
// live arcs; returns the arc matched at each left vertex.
std::vector<EdgeId> perfect_matching(int n, const std::vector<std::vector<std::pair<EdgeId, VertexId>>>& out_arcs,
                                     const std::vector<char>& live) {
  std::vector<EdgeId> left_arc(n, -1);
  std::vector<VertexId> right_owner(n, -1);
  std::vector<EdgeId> right_arc(n, -1);
  std::vector<char> visited;
  std::function<bool(VertexId)> try_left = [&](VertexId x) {
    for (const auto& [e, y] : out_arcs[x]) {
      if (!live[e] || visited[y]) continue;
      visited[y] = 1;
      if (right_owner[y] < 0 || try_left(right_owner[y])) {
        right_owner[y] = x;
        right_arc[y] = e;
        left_arc[x] = e;
        return true;
      }
    }
    return false;
  };
  for (VertexId x = 0; x < n; ++x) {
    visited.assign(n, 0);
    ensure(try_left(x), "regular bipartite graph without a perfect matching");
  }
  return left_arc;
}

}  // namespace

std::vector<TwoFactor> two_factorization(const MultiGraph& g) {
  const int d = regular_degree(g) / 2;
  const int n = g.order();
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> out_arcs(n);
  for (const Component& comp : components(g).components) {
    Trail circuit = eulerian_trail(g, comp.edges);
    VertexId at = circuit.start;
    for (const Step& s : circuit.steps) {
      out_arcs[at].push_back({s.edge, s.to});
      at = s.to;
    }
  }
  for (auto& arcs : out_arcs) std::sort(arcs.begin(), arcs.end());

  std::vector<char> live(g.size(), 1);
  std::vector<TwoFactor> factors;
  for (int i = 0; i < d; ++i) {
    std::vector<EdgeId> matched = perfect_matching(n, out_arcs, live);
    TwoFactor f(matched.begin(), matched.end());
    std::sort(f.begin(), f.end());
    for (EdgeId e : f) live[e] = 0;
    factors.push_back(std::move(f));
  }
  return factors;
}

std::vector<Trail> odd_circuit_witnesses(const MultiGraph& g) {
  require(g.order() % 2 == 1, "odd_circuit_witnesses: graph has even order");
  std::vector<Trail> out;
  for (const TwoFactor& f : two_factorization(g)) {
    std::optional<Trail> best;
    for (const Component& comp : components(g, f).components) {
      if (comp.edges.size() % 2 == 0) continue;
      if (!best || comp.edges.front() < best->edge_ids().front()) best = eulerian_trail(g, comp.edges);
    }
    ensure(best.has_value(), "2-factor of an odd-order graph without an odd circuit");
    ensure(is_circuit(g, *best), "2-factor component is not a circuit");
    out.push_back(std::move(*best));
  }
  return out;
}

}  // namespace oddtrail
