#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace oddtrail;
using namespace testing_support;

namespace {

std::vector<VertexList> sorted(std::vector<VertexList> c) {
  for (VertexList& x : c) std::sort(x.begin(), x.end());
  std::sort(c.begin(), c.end());
  return c;
}

void check_pass(const MultiGraph& g, const Decomposition& d, const Expectation& e, std::span<const int> sign = {}) {
  Certificate c = verify_decomposition(g, d, e, sign);
  for (const Violation& v : c.violations) INFO(v.detail);
  CHECK(c.pass);
}

bool contains_odd_circuit(const MultiGraph& g, const EdgeList& part) {
  return !is_balanced(SignedGraph::all_negative(g), part).balanced;
}

}  // namespace

TEST_CASE("tree_partition examples") {
  MultiGraph p = path(2);
  CHECK(sorted(tree_partition({p, {0, 1, 2}, 3})) == std::vector<VertexList>{{0}, {1}, {2}});
  CHECK(sorted(tree_partition({p, {0, 1, 2}, 1})) == std::vector<VertexList>{{0, 1, 2}});

  MultiGraph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  std::vector<VertexList> s = tree_partition({star, {1, 2, 3}, 3});
  CHECK(valid_tree_partition(star, {1, 2, 3}, 3, sorted(s)));

  CHECK_THROWS_AS(tree_partition({p, {0, 1}, 3}), Error);
  CHECK_THROWS_AS(tree_partition({p, {0, 1}, 1}), Error);
  CHECK_THROWS_AS(tree_partition({cycle(3), {0}, 1}), Error);
}

TEST_CASE("tree_partition on every small tree, distinguished set and k") {
  int cases = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const MultiGraph& t : trees(n)) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexList b;
        for (int v = 0; v < n; ++v) {
          if ((mask >> v) & 1) b.push_back(v);
        }
        const int nb = static_cast<int>(b.size());
        for (int k = nb % 2 == 0 ? 2 : 1; k <= nb; k += 2) {
          std::vector<VertexList> got = sorted(tree_partition({t, b, k}));
          CHECK(valid_tree_partition(t, b, k, got));
          if (n <= 6) {
            std::vector<std::vector<VertexList>> all = all_tree_partitions(t, b, k);
            CHECK(std::find(all.begin(), all.end(), got) != all.end());
          }
          ++cases;
        }
      }
    }
  }
  CHECK(cases > 10000);
}

TEST_CASE("tree partitions exist exactly under the parity and size conditions") {
  for (int n = 1; n <= 6; ++n) {
    for (const MultiGraph& t : trees(n)) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexList b;
        for (int v = 0; v < n; ++v) {
          if ((mask >> v) & 1) b.push_back(v);
        }
        const int nb = static_cast<int>(b.size());
        for (int k = 1; k <= n; ++k) {
          bool ok = nb >= k && (nb - k) % 2 == 0;
          CHECK(all_tree_partitions(t, b, k).empty() == !ok);
        }
      }
    }
  }
}

TEST_CASE("k_odd") {
  MultiGraph tri = cycle(3);
  Decomposition t = k_odd(tri, 1);
  REQUIRE(t.parts.size() == 1);
  CHECK(t.parts[0] == tri.all_edges());

  MultiGraph k5 = complete(5);
  Decomposition k = k_odd(k5, 2);
  Expectation two;
  two.parts = 2;
  two.odd_edges = true;
  check_pass(k5, k, two);

  MultiGraph k7 = complete(7);
  std::vector<Trail> w = odd_circuit_witnesses(k7);
  Decomposition s = k_odd(k7, 3, &w);
  Expectation three = two;
  three.parts = 3;
  check_pass(k7, s, three);
  for (const EdgeList& p : s.parts) CHECK(contains_odd_circuit(k7, p));

  CHECK_THROWS_AS(k_odd(k5, 3), Error);
  CHECK_THROWS_AS(k_odd(path(2), 1), Error);
  try {
    k_odd(cycle(4), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotFound);
    CHECK(std::string(e.what()).find("insufficient odd circuits") != std::string::npos);
  }
}

TEST_CASE("k_odd on random eulerian graphs") {
  std::mt19937_64 rng(67);
  int built = 0;
  for (int i = 0; i < 300; ++i) {
    MultiGraph g = random_eulerian(rng, 6, 14);
    for (int k = g.size() % 2 == 0 ? 2 : 1; k <= 3; k += 2) {
      try {
        Decomposition d = k_odd(g, k);
        Expectation e;
        e.parts = k;
        e.odd_edges = true;
        check_pass(g, d, e);
        for (const EdgeList& p : d.parts) CHECK(contains_odd_circuit(g, p));
        ++built;
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kNotFound);
        // Confirm that k edge-disjoint odd circuits are really missing.
        CHECK_FALSE(brute_force_exists(g, OracleQuery{k, false, std::nullopt, false, 18}).has_value());
      }
    }
  }
  CHECK(built > 100);
}

TEST_CASE("rooted_2_odd") {
  Rooted2Result c4 = rooted_2_odd(cycle(4));
  CHECK_FALSE(c4.decomposition.has_value());
  CHECK(c4.absence_reason == "bipartite");

  Rooted2Result tri = rooted_2_odd(cycle(3));
  CHECK_FALSE(tri.decomposition.has_value());
  CHECK(tri.absence_reason == "odd edge count");

  MultiGraph k5 = complete(5);
  Rooted2Result k = rooted_2_odd(k5);
  REQUIRE(k.decomposition.has_value());
  check_pass(k5, *k.decomposition, rooted(2));

  CHECK_THROWS_AS(rooted_2_odd(path(3)), Error);
}

TEST_CASE("split_off") {
  SignedGraph k7 = SignedGraph::all_negative(complete(7));
  SplitRecord r = split_off(k7, 0);
  CHECK(r.child.graph.order() == 6);
  CHECK(r.child.graph.size() == 18);
  CHECK(r.child.negative_count() == 15);
  CHECK(edge_connectivity(r.child.graph) == 6);
  CHECK(r.child.graph.is_regular(6));
  CHECK(r.parent_to_child_vertex[0] == -1);

  SignedGraph digon = SignedGraph::all_negative(from_edges(2, std::vector<Endpoints>(6, Endpoints{0, 1})));
  SplitRecord d = split_off(digon, 0);
  CHECK(d.child.graph.order() == 1);
  CHECK(d.child.graph.loop_count() == 3);
  CHECK(d.child.sign == std::vector<int>(3, 1));

  CHECK_THROWS_AS(split_off(SignedGraph::all_negative(complete(5)), 0), Error);
}

TEST_CASE("split_off keeps the sign rule, regularity and parity") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance inst = generate(InstanceSpec{6, 3 + 2 * static_cast<int>(seed % 4), seed, 6, std::nullopt,
                                          SignRule::kRandomOddParity});
    SignedGraph g{inst.graph, inst.sign};
    VertexId v = static_cast<VertexId>(seed % inst.graph.order());
    SplitRecord r = split_off(g, v);
    CHECK(r.child.graph.is_regular(6));
    CHECK(edge_connectivity(r.child.graph) >= 6);
    CHECK(r.child.negative_count() % 2 == g.negative_count() % 2);
    for (EdgeId e = 0; e < r.child.graph.size(); ++e) {
      int p = 1;
      for (EdgeId x : r.child_edge_origin[e]) p *= g.sign[x];
      CHECK(r.child.sign[e] == p);
    }
  }
}

TEST_CASE("lift") {
  SignedGraph k7 = SignedGraph::all_negative(complete(7));
  SplitRecord r = split_off(k7, 0);
  Decomposition child = signed_rooted_3_odd(r.child);
  Decomposition up = lift(r, child);
  check_pass(k7.graph, up, rooted(3, true), k7.sign);
  CHECK(up.root == std::optional<VertexId>(r.child_to_parent_vertex[*child.root]));
  for (std::size_t i = 0; i < child.parts.size(); ++i) {
    EdgeList want;
    for (EdgeId e : child.parts[i]) {
      const EdgeList& o = r.child_edge_origin[e];
      want.insert(want.end(), o.begin(), o.end());
      // Old edges map to themselves, new ones to two parent edges through v.
      if (o.size() == 2) {
        CHECK(k7.graph.endpoints(o[0]).u == 0);
        CHECK(k7.graph.endpoints(o[1]).u == 0);
      } else {
        REQUIRE(o.size() == 1);
        CHECK(r.parent_to_child_edge[o[0]] == e);
      }
    }
    std::sort(want.begin(), want.end());
    CHECK(up.parts[i] == want);
  }

  Decomposition broken = child;
  broken.parts.pop_back();
  CHECK_THROWS_AS(lift(r, broken), Error);
}

TEST_CASE("signed_rooted_3_odd") {
  SignedGraph b3 = SignedGraph::all_negative(bouquet(3));
  Decomposition d = signed_rooted_3_odd(b3);
  CHECK(d.parts == std::vector<EdgeList>{{0}, {1}, {2}});
  CHECK(d.root == std::optional<VertexId>(0));

  SignedGraph k7 = SignedGraph::all_negative(complete(7));
  Decomposition k = signed_rooted_3_odd(k7);
  check_pass(k7.graph, k, rooted(3, true), k7.sign);
  int total = 0;
  for (const EdgeList& p : k.parts) total += static_cast<int>(p.size());
  CHECK(total == 21);

  // One negative edge: tightly unbalanced, so no two disjoint unbalanced circuits.
  SignedGraph tight = SignedGraph::all_positive(complete(7));
  tight.sign[0] = -1;
  try {
    signed_rooted_3_odd(tight);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotFound);
  }
  CHECK_THROWS_AS(signed_rooted_3_odd(SignedGraph::all_negative(complete(5))), Error);
  CHECK_THROWS_AS(signed_rooted_3_odd(SignedGraph::all_positive(complete(7))), Error);
}

TEST_CASE("signed_rooted_3_odd on generated graphs") {
  int solved = 0;
  for (std::uint64_t seed = 1; solved < 40 && seed < 400; ++seed) {
    int n = 1 + 2 * static_cast<int>(seed % 5);
    Instance inst = generate(InstanceSpec{6, n, seed, 6, std::nullopt, SignRule::kRandomOddParity});
    SignedGraph g{inst.graph, inst.sign};
    if (!two_disjoint_unbalanced_circuits(g)) continue;
    Decomposition d = signed_rooted_3_odd(g);
    check_pass(g.graph, d, rooted(3, true), g.sign);
    ++solved;
  }
  CHECK(solved == 40);
}

TEST_CASE("rooted_3_odd") {
  MultiGraph k7 = complete(7);
  check_pass(k7, rooted_3_odd(k7), rooted(3));
  Decomposition b = rooted_3_odd(bouquet(3));
  CHECK(b.parts.size() == 3);
  check_pass(bouquet(3), b, rooted(3));

  CHECK_THROWS_AS(rooted_3_odd(complete(5)), Error);
  CHECK_THROWS_AS(rooted_3_odd(generate(InstanceSpec{6, 4, 1, 0, std::nullopt}).graph), Error);
}

TEST_CASE("rooted_3_odd across connectivities") {
  for (int lambda : {2, 4, 6}) {
    int levels = 0;
    SolveObserver obs;
    obs.on_level = [&](int l, int) { levels += l == lambda; };
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      int n = lambda == 6 ? 3 + 2 * static_cast<int>(seed % 4) : 7 + 2 * static_cast<int>(seed % 3);
      Instance inst = generate(InstanceSpec{6, n, seed, 0, lambda});
      Decomposition d = rooted_3_odd(inst.graph, &obs);
      check_pass(inst.graph, d, rooted(3));
    }
    CHECK(levels >= 15);
  }
}
