#include "oddtrail/generate.hpp"

#include <random>
#include <string>

namespace oddtrail {

namespace {

// Fisher-Yates with plain modulo draws, so results do not depend on the
// standard library's distribution implementations.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

void pair_up(const std::vector<VertexId>& stubs, std::vector<Endpoints>& out) {
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) out.push_back({stubs[i], stubs[i + 1]});
}

std::vector<Endpoints> plain(int n, int degree, std::mt19937_64& rng) {
  std::vector<VertexId> stubs;
  for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);
  shuffle(stubs, rng);
  std::vector<Endpoints> edges;
  pair_up(stubs, edges);
  return edges;
}

// Two random sides joined by exactly `cut` edges, so lambda <= cut.
std::vector<Endpoints> with_cut(int n, int degree, int cut, std::mt19937_64& rng) {
  const int left = 1 + static_cast<int>(rng() % (n - 1));
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId>& side = v < left ? a : b;
    side.insert(side.end(), degree, v);
  }
  shuffle(a, rng);
  shuffle(b, rng);
  std::vector<Endpoints> edges;
  for (int i = 0; i < cut; ++i) edges.push_back({a[i], b[i]});
  pair_up(std::vector<VertexId>(a.begin() + cut, a.end()), edges);
  pair_up(std::vector<VertexId>(b.begin() + cut, b.end()), edges);
  // Scatter the sides over the vertex ids.
  std::vector<VertexId> perm(n);
  for (VertexId v = 0; v < n; ++v) perm[v] = v;
  shuffle(perm, rng);
  for (Endpoints& e : edges) e = {perm[e.u], perm[e.v]};
  return edges;
}

}  // namespace

Instance generate(const InstanceSpec& spec) {
  require(spec.degree >= 0 && spec.degree % 2 == 0, "generate: degree must be even");
  require(spec.order >= 1, "generate: order must be positive");
  require(spec.retry_budget >= 1, "generate: retry budget must be positive");
  const std::optional<int> exact = spec.exact_connectivity;
  if (exact) {
    require(*exact >= spec.connectivity_floor && *exact <= spec.degree && *exact % 2 == 0,
            "generate: exact connectivity must be even, at least the floor and at most the degree");
    require(*exact == spec.degree || spec.order >= 2, "generate: a single vertex has connectivity equal to its degree");
  }
  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < spec.retry_budget; ++attempt) {
    std::vector<Endpoints> edges = exact && *exact < spec.degree ? with_cut(spec.order, spec.degree, *exact, rng)
                                                                 : plain(spec.order, spec.degree, rng);
    MultiGraph g = MultiGraph::build(spec.order, edges);
    if (!is_connected(g)) continue;
    const int lambda = edge_connectivity(g);
    if (lambda < spec.connectivity_floor) continue;
    if (exact && lambda != *exact) continue;

    Instance out{std::move(g), {}};
    if (spec.sign == SignRule::kAllNegative) out.sign.assign(out.graph.size(), -1);
    if (spec.sign == SignRule::kRandomOddParity && out.graph.size() > 0) {
      int negatives = 0;
      for (EdgeId e = 0; e < out.graph.size(); ++e) {
        out.sign.push_back(rng() % 2 ? -1 : 1);
        negatives += out.sign.back() < 0;
      }
      if (negatives % 2 == 0) {
        int& s = out.sign[rng() % out.graph.size()];
        s = -s;
      }
    }
    return out;
  }
  fail(ErrorKind::kNotFound, "generate: no instance met the spec within " + std::to_string(spec.retry_budget) +
                                 " attempts");
}

}  // namespace oddtrail
