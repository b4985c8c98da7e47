#pragma once

#include <queue>
#include <vector>

#include "oddtrail/euler.hpp"
#include "oddtrail/graph.hpp"

namespace oddtrail::detail {

// Unit-capacity maximum flow on an undirected multigraph. Each edge carries
// flow -1, 0 or +1 relative to its stored (u, v) orientation. Augmenting paths
// are found by BFS scanning incidences in edge-id order, so results are
// deterministic.
class UnitFlow {
 public:
  UnitFlow(const MultiGraph& g, std::vector<char> usable)
      : g_(g), usable_(std::move(usable)), flow_(g.size(), 0) {}

  explicit UnitFlow(const MultiGraph& g)
      : UnitFlow(g, std::vector<char>(g.size(), 1)) {}

  int run(VertexId s, VertexId t, int limit) {
    int total = 0;
    while (total < limit && augment(s, t)) ++total;
    value_ = total;
    return total;
  }

  int value() const { return value_; }

  // Vertices reachable from s in the residual graph.
  std::vector<char> residual_reach(VertexId s) const {
    std::vector<char> seen(g_.order(), 0);
    std::queue<VertexId> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (const Incidence& inc : g_.incident(x)) {
        if (!can_push(inc.edge, x) || seen[inc.other]) continue;
        seen[inc.other] = 1;
        q.push(inc.other);
      }
    }
    return seen;
  }

  // Splits the flow into s-t walks, following the least-id unused edge that
  // carries flow out of the current vertex.
  std::vector<Trail> decompose(VertexId s, VertexId t) const {
    std::vector<char> used(g_.size(), 0);
    std::vector<Trail> out;
    for (int k = 0; k < value_; ++k) {
      Trail walk{s, {}};
      VertexId x = s;
      while (x != t) {
        bool moved = false;
        for (const Incidence& inc : g_.incident(x)) {
          if (used[inc.edge] || !carries_out(inc.edge, x)) continue;
          used[inc.edge] = 1;
          walk.steps.push_back({inc.edge, inc.other});
          x = inc.other;
          moved = true;
          break;
        }
        ensure(moved, "flow decomposition stalled");
      }
      out.push_back(std::move(walk));
    }
    return out;
  }

 private:
  bool can_push(EdgeId e, VertexId from) const {
    if (!usable_[e]) return false;
    const Endpoints& ep = g_.endpoints(e);
    if (ep.is_loop()) return false;
    return ep.u == from ? flow_[e] < 1 : flow_[e] > -1;
  }

  bool carries_out(EdgeId e, VertexId from) const {
    const Endpoints& ep = g_.endpoints(e);
    if (ep.is_loop()) return false;
    return ep.u == from ? flow_[e] == 1 : flow_[e] == -1;
  }

  bool augment(VertexId s, VertexId t) {
    std::vector<EdgeId> via(g_.order(), -1);
    std::vector<char> seen(g_.order(), 0);
    std::queue<VertexId> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty() && !seen[t]) {
      VertexId x = q.front();
      q.pop();
      for (const Incidence& inc : g_.incident(x)) {
        if (seen[inc.other] || !can_push(inc.edge, x)) continue;
        seen[inc.other] = 1;
        via[inc.other] = inc.edge;
        if (inc.other == t) break;
        q.push(inc.other);
      }
    }
    if (!seen[t]) return false;
    for (VertexId y = t; y != s;) {
      EdgeId e = via[y];
      const Endpoints& ep = g_.endpoints(e);
      VertexId x = g_.other_end(e, y);
      flow_[e] += (ep.u == x) ? 1 : -1;
      y = x;
    }
    return true;
  }

  const MultiGraph& g_;
  std::vector<char> usable_;
  std::vector<int> flow_;
  int value_ = 0;
};

}  // namespace oddtrail::detail
