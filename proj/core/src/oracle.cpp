#include "oddtrail/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <queue>
#include <string>
#include <thread>

namespace oddtrail {

namespace {

class Search {
 public:
  Search(const MultiGraph& g, const OracleQuery& q, std::span<const int> sign)
      : g_(g), q_(q), sign_(sign), parity_(q.k, std::vector<char>(g.order(), 0)),
        touch_(q.k, std::vector<int>(g.order(), 0)) {
    // Edges grouped by the earlier of their ends in BFS order, so vertices
    // are completed one after another starting at the root.
    std::vector<int> pos(g.order(), -1);
    int next = 0;
    VertexList starts;
    if (q.root) starts.push_back(*q.root);
    for (VertexId v = 0; v < g.order(); ++v) starts.push_back(v);
    for (VertexId s : starts) {
      if (pos[s] >= 0) continue;
      pos[s] = next++;
      std::queue<VertexId> bfs;
      bfs.push(s);
      while (!bfs.empty()) {
        VertexId x = bfs.front();
        bfs.pop();
        for (const Incidence& inc : g.incident(x)) {
          if (pos[inc.other] < 0) {
            pos[inc.other] = next++;
            bfs.push(inc.other);
          }
        }
      }
    }
    order_ = g.all_edges();
    auto key = [&](EdgeId e) {
      const Endpoints& ep = g.endpoints(e);
      return std::tuple(std::min(pos[ep.u], pos[ep.v]), std::max(pos[ep.u], pos[ep.v]), e);
    };
    std::sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });
    completes_.assign(order_.size(), {});
    std::vector<int> last(g.order(), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Endpoints& ep = g.endpoints(order_[i]);
      last[ep.u] = last[ep.v] = static_cast<int>(i);
    }
    for (VertexId v = 0; v < g.order(); ++v) {
      if (last[v] >= 0) completes_[last[v]].push_back(v);
    }
    assigned_.assign(order_.size(), -1);
  }

  int size() const { return static_cast<int>(order_.size()); }

  // Enumerates feasible prefixes of the given depth.
  void prefixes(int depth, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(trail_.size()) == depth) {
      out.push_back(trail_);
      return;
    }
    const int i = static_cast<int>(trail_.size());
    for (int c = 0; c <= std::min(used_, q_.k - 1); ++c) {
      if (!apply(i, c)) {
        undo(i, c);
        continue;
      }
      trail_.push_back(c);
      prefixes(depth, out);
      trail_.pop_back();
      undo(i, c);
    }
  }

  bool run_from(const std::vector<int>& prefix, const std::atomic<bool>* stop) {
    stop_ = stop;
    for (std::size_t i = 0; i < prefix.size(); ++i) apply(static_cast<int>(i), prefix[i]);
    return dfs(static_cast<int>(prefix.size()));
  }

  Decomposition witness() const {
    Decomposition d;
    d.parts.assign(q_.k, {});
    for (std::size_t i = 0; i < order_.size(); ++i) d.parts[assigned_[i]].push_back(order_[i]);
    for (EdgeList& p : d.parts) std::sort(p.begin(), p.end());
    std::sort(d.parts.begin(), d.parts.end());
    if (q_.rooted) d.root = found_root_;
    return d;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Assigns position i to class c; false when a pruning rule fires.
  bool apply(int i, int c) {
    const Endpoints& ep = g_.endpoints(order_[i]);
    assigned_[i] = c;
    parity_[c][ep.u] ^= 1;
    parity_[c][ep.v] ^= 1;
    ++touch_[c][ep.u];
    ++touch_[c][ep.v];
    if (c == used_) intro_[used_++] = i;
    for (VertexId w : completes_[i]) {
      for (int x = 0; x < used_; ++x) {
        if (parity_[x][w]) return false;
      }
      if (q_.root && w == *q_.root) {
        if (used_ < q_.k) return false;
        for (int x = 0; x < q_.k; ++x) {
          if (touch_[x][w] == 0) return false;
        }
      }
    }
    return true;
  }

  void undo(int i, int c) {
    const Endpoints& ep = g_.endpoints(order_[i]);
    assigned_[i] = -1;
    parity_[c][ep.u] ^= 1;
    parity_[c][ep.v] ^= 1;
    --touch_[c][ep.u];
    --touch_[c][ep.v];
    if (c == used_ - 1 && intro_[c] == i) --used_;
  }

  bool dfs(int i) {
    ++nodes_;
    if (stop_ && (nodes_ & 1023) == 0 && stop_->load(std::memory_order_relaxed)) return false;
    const int m = size();
    if (m - i < q_.k - used_) return false;
    if (i == m) return leaf();
    for (int c = 0; c <= std::min(used_, q_.k - 1); ++c) {
      const bool ok = apply(i, c);
      if (ok && dfs(i + 1)) return true;
      undo(i, c);
    }
    return false;
  }

  bool leaf() {
    if (used_ != q_.k) return false;
    for (int c = 0; c < q_.k; ++c) {
      std::vector<int> parent(g_.order());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      int count = 0;
      for (int i = 0; i < size(); ++i) {
        if (assigned_[i] != c) continue;
        const EdgeId e = order_[i];
        const Endpoints& ep = g_.endpoints(e);
        parent[find(ep.u)] = find(ep.v);
        count += q_.signed_mode ? sign_[e] < 0 : 1;
      }
      if (count % 2 == 0) return false;
      int root = -1;
      for (VertexId v = 0; v < g_.order(); ++v) {
        if (touch_[c][v] == 0) continue;
        if (root < 0) root = find(v);
        if (find(v) != root) return false;
      }
    }
    if (!q_.rooted) return true;
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (q_.root && v != *q_.root) continue;
      bool all = true;
      for (int c = 0; c < q_.k && all; ++c) all = touch_[c][v] > 0;
      if (all) {
        found_root_ = v;
        return true;
      }
    }
    return false;
  }

  const MultiGraph& g_;
  OracleQuery q_;
  std::span<const int> sign_;
  std::vector<EdgeId> order_;
  std::vector<VertexList> completes_;
  std::vector<int> assigned_;
  std::vector<std::vector<char>> parity_;
  std::vector<std::vector<int>> touch_;
  std::vector<int> trail_;
  std::vector<int> intro_ = std::vector<int>(q_.k, -1);  // position that opened each class
  int used_ = 0;
  VertexId found_root_ = -1;
  std::uint64_t nodes_ = 0;
  const std::atomic<bool>* stop_ = nullptr;
};

void check_query(const MultiGraph& g, const OracleQuery& q, std::span<const int> sign) {
  require(q.k >= 1, "brute force: k must be positive");
  if (g.size() > q.edge_bound) {
    fail(ErrorKind::kBoundExceeded, "brute force: " + std::to_string(g.size()) + " edges exceed the bound of " +
                                        std::to_string(q.edge_bound) + "; use a smaller instance");
  }
  if (q.root) require(*q.root >= 0 && *q.root < g.order(), "brute force: root out of range");
  if (q.signed_mode) {
    require(static_cast<int>(sign.size()) == g.size(), "brute force: signature missing or of wrong length");
  }
}

}  // namespace

OracleResult brute_force_search(const MultiGraph& g, const OracleQuery& q, std::span<const int> sign) {
  check_query(g, q, sign);
  Search s(g, q, sign);
  OracleResult r;
  if (s.run_from({}, nullptr)) r.witness = s.witness();
  r.nodes = s.nodes();
  return r;
}

std::optional<Decomposition> brute_force_exists(const MultiGraph& g, const OracleQuery& q,
                                                std::span<const int> sign, int threads) {
  if (threads <= 1) return brute_force_search(g, q, sign).witness;
  check_query(g, q, sign);

  std::vector<std::vector<int>> prefixes;
  {
    Search s(g, q, sign);
    int depth = 0;
    while (depth < s.size()) {
      prefixes.clear();
      s.prefixes(++depth, prefixes);
      if (static_cast<int>(prefixes.size()) >= 4 * threads) break;
    }
    if (s.size() == 0) prefixes = {{}};
  }

  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::optional<Decomposition> found;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || stop.load()) return;
      Search s(g, q, sign);
      if (s.run_from(prefixes[i], &stop)) {
        std::lock_guard lock(mu);
        if (!found) found = s.witness();
        stop.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return found;
}

RootScan scan_roots(const MultiGraph& g, int d, int edge_bound, int threads) {
  require(d == 2 || d == 3, "scan_roots: d must be 2 or 3");
  require(g.order() % 2 == 1, "scan_roots: graph has even order");
  require(g.is_regular(2 * d), "scan_roots: graph is not " + std::to_string(2 * d) + "-regular");
  RootScan out;
  out.is_root.assign(g.order(), 0);
  for (VertexId v = 0; v < g.order(); ++v) {
    OracleQuery q{d, true, v, false, edge_bound};
    out.is_root[v] = brute_force_exists(g, q, {}, threads).has_value();
    out.counterexample = out.counterexample || !out.is_root[v];
  }
  return out;
}

}  // namespace oddtrail
