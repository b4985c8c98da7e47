#include <algorithm>
#include <queue>
#include <string>

#include "oddtrail/decomposition.hpp"

namespace oddtrail {

namespace {

class TreePartitioner {
 public:
  TreePartitioner(const MultiGraph& tree, const VertexList& distinguished)
      : tree_(tree), in_b_(tree.order(), 0) {
    for (VertexId v : distinguished) in_b_[v] = 1;
  }

  std::vector<VertexList> run(std::vector<char> alive, int k) {
    VertexList verts;
    for (VertexId v = 0; v < tree_.order(); ++v) {
      if (alive[v]) verts.push_back(v);
    }
    if (k == 1) return {verts};
    if (k == 2) return split_once(alive);
    if (static_cast<int>(verts.size()) == k) {
      std::vector<VertexList> out;
      for (VertexId v : verts) out.push_back({v});
      return out;
    }

    VertexList leaves;
    for (VertexId v : verts) {
      if (alive_degree(alive, v) == 1) leaves.push_back(v);
    }
    ensure(leaves.size() >= 2, "tree with fewer than two leaves");
    const VertexId u = leaves[0];
    const VertexId w = leaves[1];
    if (in_b_[u] && in_b_[w]) {
      alive[u] = alive[w] = 0;
      std::vector<VertexList> out = run(std::move(alive), k - 2);
      out.push_back({u});
      out.push_back({w});
      return out;
    }
    const VertexId x = in_b_[u] ? w : u;
    const VertexId nb = alive_neighbour(alive, x);
    alive[x] = 0;
    std::vector<VertexList> out = run(std::move(alive), k);
    for (VertexList& cls : out) {
      if (std::binary_search(cls.begin(), cls.end(), nb)) {
        cls.insert(std::upper_bound(cls.begin(), cls.end(), x), x);
        return out;
      }
    }
    ensure(false, "neighbour of a removed leaf lost from the partition");
    return {};
  }

 private:
  int alive_degree(const std::vector<char>& alive, VertexId v) const {
    int d = 0;
    for (const Incidence& inc : tree_.incident(v)) d += alive[inc.other];
    return d;
  }

  VertexId alive_neighbour(const std::vector<char>& alive, VertexId v) const {
    for (const Incidence& inc : tree_.incident(v)) {
      if (alive[inc.other]) return inc.other;
    }
    return -1;
  }

  // Vertices reachable from `from` without crossing edge `cut`.
  VertexList side_of(const std::vector<char>& alive, VertexId from, EdgeId cut) const {
    std::vector<char> seen(tree_.order(), 0);
    std::queue<VertexId> q;
    seen[from] = 1;
    q.push(from);
    VertexList out;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      out.push_back(x);
      for (const Incidence& inc : tree_.incident(x)) {
        if (inc.edge == cut || !alive[inc.other] || seen[inc.other]) continue;
        seen[inc.other] = 1;
        q.push(inc.other);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // k = 2: cut the tree at an edge leaving an odd number of distinguished
  // vertices on each side, preferring the largest possible class.
  std::vector<VertexList> split_once(const std::vector<char>& alive) const {
    std::vector<VertexList> best;
    std::size_t best_size = 0;
    for (EdgeId e = 0; e < tree_.size(); ++e) {
      const Endpoints& ep = tree_.endpoints(e);
      if (!alive[ep.u] || !alive[ep.v]) continue;
      VertexList side = side_of(alive, ep.u, e);
      int count = 0;
      for (VertexId v : side) count += in_b_[v];
      if (count % 2 == 0) continue;
      VertexList rest = side_of(alive, ep.v, e);
      std::size_t larger = std::max(side.size(), rest.size());
      if (larger <= best_size) continue;
      best_size = larger;
      best = side.size() >= rest.size() ? std::vector{side, rest} : std::vector{rest, side};
    }
    ensure(!best.empty(), "no edge splits the distinguished set oddly");
    return best;
  }

  const MultiGraph& tree_;
  std::vector<char> in_b_;
};

}  // namespace

std::vector<VertexList> tree_partition(const TreePartitionInstance& inst) {
  const MultiGraph& t = inst.tree;
  require(t.order() >= 1 && t.size() == t.order() - 1 && is_connected(t), "tree_partition: input is not a tree");
  VertexList b = inst.distinguished;
  std::sort(b.begin(), b.end());
  require(std::adjacent_find(b.begin(), b.end()) == b.end(), "tree_partition: repeated distinguished vertex");
  for (VertexId v : b) require(v >= 0 && v < t.order(), "tree_partition: distinguished vertex out of range");
  require(inst.k >= 1, "tree_partition: k must be positive");
  require(static_cast<int>(b.size()) >= inst.k, "tree_partition: |B| = " + std::to_string(b.size()) + " < k = " +
                                                     std::to_string(inst.k));
  require((static_cast<int>(b.size()) - inst.k) % 2 == 0, "tree_partition: |B| and k differ in parity");

  TreePartitioner p(t, b);
  std::vector<VertexList> out = p.run(std::vector<char>(t.order(), 1), inst.k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oddtrail
