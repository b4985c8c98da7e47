#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "oddtrail/graph.hpp"

namespace oddtrail {

struct Step {
  EdgeId edge;
  VertexId to;

  friend bool operator==(const Step&, const Step&) = default;
};

// A trail v0 e1 v1 ... ek vk. Closed when vk == v0; a zero-step trail is the
// trivial path at `start`.
struct Trail {
  VertexId start = 0;
  std::vector<Step> steps;

  VertexId end() const { return steps.empty() ? start : steps.back().to; }
  bool closed() const { return !steps.empty() && end() == start; }
  int length() const { return static_cast<int>(steps.size()); }
  EdgeList edge_ids() const;     // sorted
  VertexList vertices() const;   // sorted, unique
  std::vector<VertexId> vertex_sequence() const;

  friend bool operator==(const Trail&, const Trail&) = default;
};

using Path = Trail;

struct Fan {
  VertexId hub = 0;
  std::vector<Path> spokes;
};

// Shared validator: incidence and edge distinctness, plus the extra
// restrictions of paths (distinct vertices) and circuits (closed, distinct
// inner vertices).
bool is_trail(const MultiGraph& g, const Trail& t);
bool is_path(const MultiGraph& g, const Trail& t);
bool is_circuit(const MultiGraph& g, const Trail& t);

// Hierholzer with least-id edge choice. Without `start`, open trails begin at
// the least odd vertex and closed trails at the least touched vertex.
Trail eulerian_trail(const MultiGraph& g, std::span<const EdgeId> edges,
                     std::optional<VertexId> start = std::nullopt);
Trail eulerian_trail(const MultiGraph& g);

std::vector<Trail> circuit_decomposition(const MultiGraph& g, std::span<const EdgeId> edges);
std::vector<Trail> circuit_decomposition(const MultiGraph& g);

// The required circuits come first, verbatim, followed by a circuit
// decomposition of the remaining edges.
std::vector<Trail> circuit_decomposition_including(const MultiGraph& g,
                                                   std::span<const Trail> required);

// Listing-Lucas: k open trails for a connected subgraph with 2k odd vertices.
std::vector<Trail> open_trail_decomposition(const MultiGraph& g, std::span<const EdgeId> edges);
std::vector<Trail> open_trail_decomposition(const MultiGraph& g);

// Removes every closed detour so that no vertex repeats; ends are kept.
Path shortcut_to_path(const Trail& t);

std::vector<Path> disjoint_paths_covering_odd(const MultiGraph& g, std::span<const EdgeId> edges);
std::vector<Path> disjoint_paths_covering_odd(const MultiGraph& g);

// Edge-disjoint hub -> targets[i] paths (targets may repeat, must avoid hub).
Fan fan(const MultiGraph& g, VertexId hub, std::span<const VertexId> targets);

// Edge-disjoint b -> Y paths, path i leaving b through first_edges[i] and
// stopping at its first vertex in Y. The returned segments drop the first
// edge, so segment i starts at the far end of first_edges[i] (and is trivial
// when that end already lies in Y).
std::vector<Path> paths_through_prescribed_edges(const MultiGraph& g, VertexId b,
                                                 std::span<const EdgeId> first_edges,
                                                 std::span<const VertexId> targets);

// Calls `visit` once per circuit of the edge-induced subgraph (loops and
// digons included) until it returns false.
void for_each_circuit(const MultiGraph& g, std::span<const EdgeId> edges,
                      const std::function<bool(const Trail&)>& visit);

// Shortest path (BFS, least-id ties) inside the listed edges.
std::optional<Path> shortest_path(const MultiGraph& g, std::span<const EdgeId> edges,
                                  VertexId from, VertexId to);

// Rebuilds a circuit from its edge set; nullopt if the edges do not form one.
std::optional<Trail> circuit_from_edges(const MultiGraph& g, std::span<const EdgeId> edges);

}  // namespace oddtrail
