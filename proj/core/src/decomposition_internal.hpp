#pragma once

#include <vector>

#include "oddtrail/decomposition.hpp"

namespace oddtrail::detail {

// A smaller graph standing in for a parent: every child edge expands to a set
// of parent edges, so child decompositions lift by substitution.
struct Reduction {
  std::vector<VertexId> child_to_parent_vertex;
  std::vector<EdgeList> expansion;
};

Decomposition lift_through(const Reduction& r, const Decomposition& child);

// Grows an odd eulerian subgraph `odd` of `universe` to a fixpoint: even
// eulerian components of universe - odd are merged in, and odd eulerian ones
// are merged in pairs. Afterwards universe - odd has no even eulerian
// component and at most one odd one.
EdgeList grow_odd_eulerian(const MultiGraph& g, const EdgeList& universe, EdgeList odd);

// Least-id odd circuit inside the listed edges (fundamental circuit of the
// all-negative signature), or an empty list when the edges are bipartite.
EdgeList find_odd_circuit(const MultiGraph& g, const EdgeList& edges);

// Attaches each pending eulerian piece to the least-index part it touches,
// scanning pieces in ascending order of least edge id until none remain.
void absorb(const MultiGraph& g, std::vector<EdgeList>& parts, std::vector<VertexList>& anchors,
            std::vector<EdgeList> pending);

// Throws kTheoremViolation unless every part is eulerian, has the requested
// parity (odd edge count, or odd negative count when `sign` is given) and
// contains the root.
void check_rooted(const MultiGraph& g, const Decomposition& d, int parts,
                  const std::vector<int>* sign, const char* where);

}  // namespace oddtrail::detail
