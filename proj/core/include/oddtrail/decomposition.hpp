#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddtrail/euler.hpp"
#include "oddtrail/graph.hpp"
#include "oddtrail/signed_graph.hpp"

namespace oddtrail {

// Parts are sorted edge lists that partition the parent's edges. The parent
// graph is not stored; callers keep it alongside.
struct Decomposition {
  std::vector<EdgeList> parts;
  std::optional<VertexId> root;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// ---------------------------------------------------------------------------
// Tree partition

struct TreePartitionInstance {
  MultiGraph tree;
  VertexList distinguished;  // the set B
  int k = 1;
};

// k disjoint vertex classes covering the tree, each inducing a subtree and
// holding an odd number of distinguished vertices. Requires |B| >= k and
// |B| = k (mod 2).
std::vector<VertexList> tree_partition(const TreePartitionInstance& inst);

// ---------------------------------------------------------------------------
// k-odd decompositions

// k parts, each eulerian with an odd number of edges. Without witnesses the
// odd circuits are taken from a 2-factorization when g is regular of odd
// order, otherwise searched for exhaustively.
Decomposition k_odd(const MultiGraph& g, int k, const std::vector<Trail>* witnesses = nullptr);

struct Rooted2Result {
  std::optional<Decomposition> decomposition;
  std::string absence_reason;  // "bipartite" or "odd edge count" when absent
};

Rooted2Result rooted_2_odd(const MultiGraph& g);

// ---------------------------------------------------------------------------
// Splitting off

// Replaces a degree-6 vertex v by three edges pairing up its six edge-ends.
struct SplitRecord {
  VertexId vertex = 0;
  std::array<std::pair<EdgeId, EdgeId>, 3> pairing{};  // parent edges at v
  SignedGraph child;
  std::vector<VertexId> child_to_parent_vertex;
  std::vector<VertexId> parent_to_child_vertex;  // -1 for the split vertex
  std::vector<EdgeId> parent_to_child_edge;      // -1 for edges at the split vertex
  std::vector<EdgeList> child_edge_origin;       // parent edges behind each child edge
};

// Takes the lexicographically least pairing whose child stays
// 6-edge-connected. Requires a 6-edge-connected 6-regular graph on >= 2
// vertices.
SplitRecord split_off(const SignedGraph& g, VertexId v);

// Pulls a rooted decomposition of the child back to the parent by
// subdividing every new edge through the split vertex.
Decomposition lift(const SplitRecord& rec, const Decomposition& child_dec);

struct SplitEvent {
  const SignedGraph& parent;
  const SplitRecord& record;
  const Decomposition& child;
  const Decomposition& lifted;
};

struct SolveObserver {
  std::function<void(const SplitEvent&)> on_split;
  // Connectivity and order of every unsigned level of rooted_3_odd.
  std::function<void(int lambda, int order)> on_level;
};

// ---------------------------------------------------------------------------
// Rooted 3-odd decompositions

// Rooted decomposition into three eulerian parts with an odd number of
// negative edges each. g must be 6-edge-connected, 6-regular, with an odd
// number of negative edges and two edge-disjoint unbalanced circuits (found
// automatically when `witnesses` is absent).
Decomposition signed_rooted_3_odd(const SignedGraph& g,
                                  std::optional<std::pair<Trail, Trail>> witnesses = std::nullopt,
                                  const SolveObserver* observer = nullptr);

// Rooted decomposition into three odd closed trails of a connected 6-regular
// graph of odd order, reducing 2- and 4-edge-cuts before the signed case.
Decomposition rooted_3_odd(const MultiGraph& g, const SolveObserver* observer = nullptr);

}  // namespace oddtrail
