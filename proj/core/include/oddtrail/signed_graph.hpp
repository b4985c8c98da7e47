#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oddtrail/euler.hpp"
#include "oddtrail/graph.hpp"

namespace oddtrail {

// Multigraph with a signature: sign[e] is +1 or -1 for every edge.
struct SignedGraph {
  MultiGraph graph;
  std::vector<int> sign;

  static SignedGraph all_positive(MultiGraph g);
  // Unsigned odd-trail questions become signed ones under this signature.
  static SignedGraph all_negative(MultiGraph g);

  int negative_count() const;
  int negative_count(std::span<const EdgeId> edges) const;
  bool valid() const;
};

enum class Parity { kEven, kOdd };

// Either a switching potential witnessing balance (sign(uv) = p(u) p(v) on
// every edge), or an unbalanced circuit.
struct BalanceCertificate {
  bool balanced = true;
  std::vector<int> potential;
  std::optional<Trail> witness;
};

// Flips the sign of every edge with exactly one end in `vertices`.
SignedGraph switch_at(const SignedGraph& g, std::span<const VertexId> vertices);

// Product of the signs along a trail.
int sign_product(const SignedGraph& g, const Trail& t);

BalanceCertificate is_balanced(const SignedGraph& g);
BalanceCertificate is_balanced(const SignedGraph& g, std::span<const EdgeId> edges);

Parity negative_parity(const SignedGraph& g);

// Least edge whose deletion balances g; nullopt means amply unbalanced.
// Throws kPrecondition when g is already balanced.
std::optional<EdgeId> is_tightly_unbalanced(const SignedGraph& g);

// Two edge-disjoint unbalanced circuits, or nullopt when none exist.
// Fundamental circuits of BFS trees from every root are tried first; the
// exhaustive circuit scan behind them is exponential in the worst case and is
// meant for desk-scale graphs.
std::optional<std::pair<Trail, Trail>> two_disjoint_unbalanced_circuits(const SignedGraph& g);

// Extends two edge-disjoint unbalanced circuits by a third, taken from a
// component of the remainder with an odd number of negative edges.
std::array<Trail, 3> three_disjoint_unbalanced_circuits(const SignedGraph& g, const Trail& first,
                                                        const Trail& second);

}  // namespace oddtrail
