#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace testing_support {

MultiGraph complete(int n) {
  std::vector<Endpoints> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return MultiGraph::build(n, e);
}

MultiGraph cycle(int n) {
  std::vector<Endpoints> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return MultiGraph::build(n, e);
}

MultiGraph path(int length) {
  std::vector<Endpoints> e;
  for (int i = 0; i < length; ++i) e.push_back({i, i + 1});
  return MultiGraph::build(length + 1, e);
}

MultiGraph bouquet(int loops) { return MultiGraph::build(1, std::vector<Endpoints>(loops, Endpoints{0, 0})); }

MultiGraph from_edges(int n, std::vector<Endpoints> edges) { return MultiGraph::build(n, edges); }

int brute_min_cut(const MultiGraph& g) {
  const int n = g.order();
  if (n == 1) return 2 * g.size();
  int best = g.size() + 1;
  for (std::uint32_t mask = 1; mask < (1u << n) - 1; mask += 2) {  // vertex 0 always on side 1
    int cut = 0;
    for (const Endpoints& ep : g.edges()) cut += ((mask >> ep.u) & 1) != ((mask >> ep.v) & 1);
    best = std::min(best, cut);
  }
  return best;
}

namespace {

std::vector<int> parent_init(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

bool closed_connected(const MultiGraph& g, const EdgeList& edges) {
  if (edges.empty()) return false;
  std::vector<int> deg(g.order(), 0);
  std::vector<int> p = parent_init(g.order());
  for (EdgeId e : edges) {
    const Endpoints& ep = g.endpoints(e);
    ++deg[ep.u];
    ++deg[ep.v];
    p[find(p, ep.u)] = find(p, ep.v);
  }
  int root = -1;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (deg[v] == 0) continue;
    if (deg[v] % 2) return false;
    if (root < 0) root = find(p, v);
    if (find(p, v) != root) return false;
  }
  return true;
}

std::vector<EdgeList> brute_circuits(const MultiGraph& g) {
  const int m = g.size();
  require(m <= 20, "brute_circuits: too many edges");
  std::vector<EdgeList> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    EdgeList edges;
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1) edges.push_back(e);
    }
    std::vector<int> deg(g.order(), 0);
    for (EdgeId e : edges) {
      ++deg[g.endpoints(e).u];
      ++deg[g.endpoints(e).v];
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) continue;
    if (closed_connected(g, edges)) out.push_back(edges);
  }
  return out;
}

namespace {

// AHU canonical string of a tree rooted at r.
std::string canon(const std::vector<std::vector<int>>& adj, int r, int parent) {
  std::vector<std::string> kids;
  for (int c : adj[r]) {
    if (c != parent) kids.push_back(canon(adj, c, r));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const std::string& k : kids) s += k;
  return s + ")";
}

std::string tree_key(const std::vector<std::vector<int>>& adj) {
  // Canonical over all roots; trees are tiny.
  std::string best;
  for (int r = 0; r < static_cast<int>(adj.size()); ++r) {
    std::string c = canon(adj, r, -1);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

}  // namespace

std::vector<MultiGraph> trees(int n) {
  if (n == 1) return {MultiGraph::build(1, std::vector<Endpoints>{})};
  if (n == 2) return {MultiGraph::build(2, std::vector<Endpoints>{{0, 1}})};
  std::set<std::string> seen;
  std::vector<MultiGraph> out;
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    // Decode the Pruefer sequence.
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Endpoints> edges;
    std::vector<int> d = degree;
    for (int x : seq) {
      int leaf = 0;
      while (d[leaf] != 1) ++leaf;
      edges.push_back({leaf, x});
      --d[leaf];
      --d[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (d[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.push_back({u, v});
        }
      }
    }
    std::vector<std::vector<int>> adj(n);
    for (const Endpoints& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    if (seen.insert(tree_key(adj)).second) out.push_back(MultiGraph::build(n, edges));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

bool valid_tree_partition(const MultiGraph& tree, const VertexList& b, int k,
                          const std::vector<VertexList>& classes) {
  if (static_cast<int>(classes.size()) != k) return false;
  std::vector<int> owner(tree.order(), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) return false;
    for (VertexId v : classes[i]) {
      if (v < 0 || v >= tree.order() || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  if (std::count(owner.begin(), owner.end(), -1) > 0) return false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    // A vertex set of a tree induces a subtree iff it spans |set| - 1 edges.
    int inside = 0;
    for (const Endpoints& e : tree.edges()) inside += owner[e.u] == static_cast<int>(i) && owner[e.v] == static_cast<int>(i);
    if (inside != static_cast<int>(classes[i].size()) - 1) return false;
    int in_b = 0;
    for (VertexId v : classes[i]) in_b += std::count(b.begin(), b.end(), v) > 0;
    if (in_b % 2 == 0) return false;
  }
  return true;
}

std::vector<std::vector<VertexList>> all_tree_partitions(const MultiGraph& tree, const VertexList& b, int k) {
  const int n = tree.order();
  std::vector<std::vector<VertexList>> out;
  std::vector<int> label(n, 0);
  // Restricted growth strings enumerate set partitions exactly once.
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used != k) return;
      std::vector<VertexList> classes(k);
      for (int v = 0; v < n; ++v) classes[label[v]].push_back(v);
      std::sort(classes.begin(), classes.end());
      if (valid_tree_partition(tree, b, k, classes)) out.push_back(classes);
      return;
    }
    for (int c = 0; c <= std::min(used, k - 1); ++c) {
      label[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return out;
}

MultiGraph random_eulerian(std::mt19937_64& rng, int max_vertices, int max_edges) {
  for (;;) {
    const int n = 1 + static_cast<int>(rng() % max_vertices);
    std::vector<Endpoints> edges;
    const int walks = 1 + static_cast<int>(rng() % 4);
    for (int w = 0; w < walks; ++w) {
      const int len = 1 + static_cast<int>(rng() % 5);
      std::vector<int> vs;
      for (int i = 0; i < len; ++i) vs.push_back(static_cast<int>(rng() % n));
      for (int i = 0; i < len; ++i) edges.push_back({vs[i], vs[(i + 1) % len]});
    }
    if (static_cast<int>(edges.size()) > max_edges) continue;
    // Drop isolated vertices by relabelling.
    std::vector<int> id(n, -1);
    int next = 0;
    for (Endpoints& e : edges) {
      if (id[e.u] < 0) id[e.u] = next++;
      if (id[e.v] < 0) id[e.v] = next++;
      e = {id[e.u], id[e.v]};
    }
    MultiGraph g = MultiGraph::build(next, edges);
    EdgeList all(g.size());
    std::iota(all.begin(), all.end(), 0);
    if (closed_connected(g, all)) return g;
  }
}

std::vector<int> random_signs(std::mt19937_64& rng, int m) {
  std::vector<int> s(m);
  for (int& x : s) x = rng() % 2 ? -1 : 1;
  return s;
}

Expectation rooted(int parts, bool signed_parts) {
  Expectation e;
  e.parts = parts;
  e.odd_edges = !signed_parts;
  e.odd_negatives = signed_parts;
  e.rooted = true;
  return e;
}

}  // namespace testing_support
