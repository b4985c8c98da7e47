#include "oddtrail/verify.hpp"

#include <numeric>

namespace oddtrail {

namespace {

class Dsu {
 public:
  explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

std::string part_name(std::size_t i) { return "part " + std::to_string(i); }

}  // namespace

Certificate verify_decomposition(const MultiGraph& g, const Decomposition& dec, const Expectation& expect,
                                 std::span<const int> sign) {
  Certificate cert;
  auto violate = [&](std::string condition, std::string detail, std::vector<int> ids) {
    cert.violations.push_back({std::move(condition), std::move(detail), std::move(ids)});
  };

  cert.checked.push_back("partition");
  std::vector<int> owner(g.size(), -1);
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    for (EdgeId e : dec.parts[i]) {
      if (e < 0 || e >= g.size()) {
        violate("partition", "not a partition: edge " + std::to_string(e) + " out of range in " + part_name(i),
                {e, static_cast<int>(i)});
      } else if (owner[e] >= 0) {
        violate("partition", "not a partition: edge " + std::to_string(e) + " in " + part_name(owner[e]) + " and " +
                                 part_name(i),
                {e, owner[e], static_cast<int>(i)});
      } else {
        owner[e] = static_cast<int>(i);
      }
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (owner[e] < 0) violate("partition", "not a partition: edge " + std::to_string(e) + " uncovered", {e});
  }

  if (expect.parts) {
    cert.checked.push_back("part count");
    if (static_cast<int>(dec.parts.size()) != *expect.parts) {
      violate("part count",
              "expected " + std::to_string(*expect.parts) + " parts, found " + std::to_string(dec.parts.size()),
              {static_cast<int>(dec.parts.size())});
    }
  }

  cert.checked.push_back("connected");
  cert.checked.push_back("even degree");
  if (expect.odd_edges) cert.checked.push_back("odd edge count");
  if (expect.odd_negatives) cert.checked.push_back("odd negative count");
  if (expect.rooted) cert.checked.push_back("root");
  if (expect.rooted && (!dec.root || *dec.root < 0 || *dec.root >= g.order())) {
    violate("root", dec.root ? "root " + std::to_string(*dec.root) + " out of range" : "no root given", {});
  }
  const bool root_ok = expect.rooted && dec.root && *dec.root >= 0 && *dec.root < g.order();
  const bool signs_ok = static_cast<int>(sign.size()) == g.size();
  if (expect.odd_negatives && !signs_ok) violate("odd negative count", "signature missing or of wrong length", {});

  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const int pi = static_cast<int>(i);
    if (dec.parts[i].empty()) {
      violate("connected", part_name(i) + " is empty", {pi});
      continue;
    }
    std::vector<int> deg(g.order(), 0);
    Dsu dsu(g.order());
    int negatives = 0;
    int edges = 0;
    for (EdgeId e : dec.parts[i]) {
      if (e < 0 || e >= g.size()) continue;
      const Endpoints& ep = g.endpoints(e);
      deg[ep.u] += 1;
      deg[ep.v] += 1;
      dsu.unite(ep.u, ep.v);
      ++edges;
      if (signs_ok && sign[e] < 0) ++negatives;
    }
    int comp = -1;
    bool connected = true;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] % 2 == 1) {
        violate("even degree", "odd degree at vertex " + std::to_string(v) + " in " + part_name(i), {v, pi});
      }
      if (comp < 0) comp = dsu.find(v);
      connected = connected && dsu.find(v) == comp;
    }
    if (!connected) violate("connected", part_name(i) + " is disconnected", {pi});
    if (expect.odd_edges && edges % 2 == 0) violate("odd edge count", part_name(i) + " even edge count", {pi});
    if (expect.odd_negatives && signs_ok && negatives % 2 == 0) {
      violate("odd negative count", part_name(i) + " even negative count", {pi});
    }
    if (root_ok && deg[*dec.root] == 0) {
      violate("root", part_name(i) + " misses root", {pi, *dec.root});
    }
  }
  cert.pass = cert.violations.empty();
  return cert;
}

}  // namespace oddtrail
