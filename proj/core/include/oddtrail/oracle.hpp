#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oddtrail/decomposition.hpp"
#include "oddtrail/graph.hpp"

namespace oddtrail {

struct OracleQuery {
  int k = 1;
  bool rooted = false;
  std::optional<VertexId> root;  // with rooted and no root: any vertex may serve
  bool signed_mode = false;      // parity counts negative edges instead of edges
  int edge_bound = 18;
};

struct OracleResult {
  std::optional<Decomposition> witness;
  std::uint64_t nodes = 0;  // search nodes visited
};

// Exhaustive search over assignments of edges to k classes with canonical
// class order and per-vertex parity pruning. Throws kBoundExceeded above
// q.edge_bound edges.
OracleResult brute_force_search(const MultiGraph& g, const OracleQuery& q, std::span<const int> sign = {});

// Same search; with threads > 1 the top of the search tree is shared out and
// the first witness found wins.
std::optional<Decomposition> brute_force_exists(const MultiGraph& g, const OracleQuery& q,
                                                std::span<const int> sign = {}, int threads = 1);

struct RootScan {
  std::vector<char> is_root;  // per vertex
  bool counterexample = false;
};

// For a 2d-regular graph of odd order (d = 2 or 3): which vertices root a
// d-odd decomposition.
RootScan scan_roots(const MultiGraph& g, int d, int edge_bound = 18, int threads = 1);

}  // namespace oddtrail
