#pragma once

// Named graphs and independent brute-force oracles shared by the tests.
// Nothing here calls the library's algorithms beyond MultiGraph itself.

#include <cstdint>
#include <random>
#include <vector>

#include "oddtrail/oddtrail.hpp"

namespace testing_support {

using namespace oddtrail;

MultiGraph complete(int n);
MultiGraph cycle(int n);
MultiGraph path(int length);
MultiGraph bouquet(int loops);
MultiGraph from_edges(int n, std::vector<Endpoints> edges);

// Minimum over all vertex bipartitions of the crossing edge count; the
// bouquet convention 2 * loops for one vertex.
int brute_min_cut(const MultiGraph& g);

// Edge sets of all circuits of g (connected, every touched vertex of degree
// exactly 2), by subset enumeration. Requires <= 20 edges.
std::vector<EdgeList> brute_circuits(const MultiGraph& g);

// True when the edges form a connected subgraph with all degrees even.
bool closed_connected(const MultiGraph& g, const EdgeList& edges);

// All non-isomorphic trees on n vertices (Pruefer enumeration, AHU dedupe).
std::vector<MultiGraph> trees(int n);

// True when the classes are disjoint, cover the tree, each induces a
// connected subtree and holds an odd number of vertices from b.
bool valid_tree_partition(const MultiGraph& tree, const VertexList& b, int k, const std::vector<VertexList>& classes);

// All valid partitions into k classes (each class sorted, classes sorted).
std::vector<std::vector<VertexList>> all_tree_partitions(const MultiGraph& tree, const VertexList& b, int k);

// Random connected eulerian multigraph built from random closed walks.
MultiGraph random_eulerian(std::mt19937_64& rng, int max_vertices, int max_edges);

// Random signature.
std::vector<int> random_signs(std::mt19937_64& rng, int m);

// Expectation for the standard modes.
Expectation rooted(int parts, bool signed_parts = false);

}  // namespace testing_support
