#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oddtrail/error.hpp"

namespace oddtrail {

using VertexId = int;
using EdgeId = int;

// Sorted list of edge ids of one parent graph; the working representation of
// a subgraph throughout the library.
using EdgeList = std::vector<EdgeId>;
using VertexList = std::vector<VertexId>;

struct Endpoints {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

struct Incidence {
  EdgeId edge;
  VertexId other;
};

// Undirected multigraph with loops and parallel edges. Vertex and edge ids are
// dense and positional; a value never changes after build().
class MultiGraph {
 public:
  MultiGraph() = default;

  // Edge ids follow input order. Throws kInvalidInput naming the offending
  // edge index when an endpoint is out of range.
  static MultiGraph build(int n, std::span<const Endpoints> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const Endpoints& endpoints(EdgeId e) const { return edges_[e]; }
  std::span<const Endpoints> edges() const { return edges_; }

  // Incidences sorted by edge id; a loop is listed twice.
  std::span<const Incidence> incident(VertexId v) const { return incidence_[v]; }

  int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }
  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  bool is_regular(int d) const;
  int loop_count() const;

  // Consistency of incidence lists, edge list and the handshake identity.
  bool audit() const;

  EdgeList all_edges() const;

  // Returns a copy with `extra` appended; existing ids are unchanged.
  MultiGraph with_added_edges(std::span<const Endpoints> extra) const;

 private:
  int n_ = 0;
  std::vector<Endpoints> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

struct Component {
  VertexList vertices;
  EdgeList edges;
};

struct ComponentSplit {
  std::vector<Component> components;  // ordered by least vertex
  VertexList isolated;                // vertices of the parent untouched by the edges
};

ComponentSplit components(const MultiGraph& g);
ComponentSplit components(const MultiGraph& g, std::span<const EdgeId> edges);

bool is_connected(const MultiGraph& g);
bool is_connected(const MultiGraph& g, std::span<const EdgeId> edges);

// Vertices touched by the edges, ascending.
VertexList vertices_of(const MultiGraph& g, std::span<const EdgeId> edges);

// Degree of v counting only the listed edges (loops count twice).
int degree_in(const MultiGraph& g, std::span<const EdgeId> edges, VertexId v);
std::vector<int> degrees_in(const MultiGraph& g, std::span<const EdgeId> edges);
VertexList odd_vertices(const MultiGraph& g, std::span<const EdgeId> edges);

// Connected, nonempty and every induced degree even.
bool is_eulerian_subgraph(const MultiGraph& g, std::span<const EdgeId> edges);

// Edges with both ends in `side` (side given as ascending vertex list).
EdgeList induced_edges(const MultiGraph& g, std::span<const VertexId> side);

EdgeList edge_union(std::span<const EdgeId> a, std::span<const EdgeId> b);
EdgeList edge_difference(std::span<const EdgeId> a, std::span<const EdgeId> b);
bool share_vertex(std::span<const VertexId> a, std::span<const VertexId> b);

// --- Connectivity ------------------------------------------------------------

// Minimum edge cut size. Single-vertex graphs follow the bouquet convention
// lambda(B_d) = 2d; disconnected graphs give 0.
int edge_connectivity(const MultiGraph& g);

// Maximum number of edge-disjoint s-t paths, stopping early at `limit`.
int local_edge_connectivity(const MultiGraph& g, VertexId s, VertexId t, int limit);

struct Cut {
  VertexList side;  // contains vertex 0
  EdgeList edges;
};

// A minimum cut of size <= bound, or nullopt. Among minimum cuts found by the
// 0-t flow sweep the lexicographically least side is returned.
std::optional<Cut> min_cut(const MultiGraph& g, int bound);

// BFS 2-colouring of the edge-induced subgraph, each component coloured from
// its least vertex. nullopt if a loop or odd circuit exists.
std::optional<std::pair<VertexList, VertexList>> bipartition(const MultiGraph& g);
std::optional<std::pair<VertexList, VertexList>> bipartition(const MultiGraph& g,
                                                             std::span<const EdgeId> edges);

// --- Derived graphs ----------------------------------------------------------

struct Contraction {
  MultiGraph graph;
  std::vector<VertexId> vertex_map;  // old vertex -> new vertex
  VertexId block_vertex = 0;
  // Edge ids are preserved one-to-one, so no edge map is stored.
};

// Block vertices collapse onto one vertex placed at the position of the least
// block vertex; edges inside the block become loops.
Contraction contract(const MultiGraph& g, std::span<const VertexId> block);

struct Subgraph {
  MultiGraph graph;
  std::vector<VertexId> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
  std::vector<VertexId> from_parent_vertex;  // -1 when absent
  std::vector<EdgeId> from_parent_edge;      // -1 when absent
};

// Keeps the listed vertices (ascending) and edges (ascending); every kept edge
// must have both ends among the kept vertices.
Subgraph extract(const MultiGraph& g, std::span<const VertexId> vertices,
                 std::span<const EdgeId> edges);

}  // namespace oddtrail
