#pragma once

#include <vector>

#include "oddtrail/euler.hpp"
#include "oddtrail/graph.hpp"

namespace oddtrail {

// Spanning subgraph with every degree exactly 2, as a sorted edge list.
using TwoFactor = EdgeList;

// Petersen: splits a 2d-regular multigraph into d edge-disjoint 2-factors.
// Edges are oriented along an eulerian circuit of each component; the
// out/in incidence graph is then d-regular bipartite and its perfect
// matchings pull back to 2-factors.
std::vector<TwoFactor> two_factorization(const MultiGraph& g);

// One odd circuit per 2-factor (the one with least minimum edge id) for a
// 2d-regular graph of odd order.
std::vector<Trail> odd_circuit_witnesses(const MultiGraph& g);

}  // namespace oddtrail
