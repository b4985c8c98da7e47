// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace oddtrail;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(why);
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Clock::time_point t = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("uncaught: ") + e.what());
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds_since(t));
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << o.detail << ", "
            << buf << ")\n";
  for (const std::string& p : o.problems) std::cout << "    " << p << "\n";
  std::cout.flush();
  failures += !o.pass;
}

std::string first_violation(const Certificate& c) { return c.violations.empty() ? "" : c.violations.front().detail; }

std::string describe(const InstanceSpec& s) {
  std::ostringstream out;
  out << "degree " << s.degree << " order " << s.order << " seed " << s.seed;
  if (s.exact_connectivity) out << " lambda " << *s.exact_connectivity;
  return out.str();
}

// Split events collected while solving the 6-regular suites.
struct SplitAudit {
  int events = 0;
  Outcome outcome;

  void operator()(const SplitEvent& ev) {
    ++events;
    const SignedGraph& child = ev.record.child;
    if (edge_connectivity(child.graph) < 6) outcome.fail("split child below 6-edge-connectivity");
    if (!child.graph.is_regular(6)) outcome.fail("split child not 6-regular");
    if (child.negative_count() % 2 != ev.parent.negative_count() % 2) outcome.fail("split changed negative parity");
    Certificate c = verify_decomposition(ev.parent.graph, ev.lifted, rooted(3, true), ev.parent.sign);
    if (!c.pass) outcome.fail("lifted decomposition rejected: " + first_violation(c));
  }
};

SplitAudit splits;
std::vector<std::pair<MultiGraph, Decomposition>> passing;

Outcome rooted2_suite() {
  Outcome o;
  int ok = 0;
  for (int i = 0; i < 200; ++i) {
    InstanceSpec spec{4, 5 + 2 * (i % 6), static_cast<std::uint64_t>(1000 + i), 0, std::nullopt};
    Instance inst = generate(spec);
    Rooted2Result r = rooted_2_odd(inst.graph);
    if (!r.decomposition) {
      o.fail(describe(spec) + ": absent (" + r.absence_reason + ")");
      continue;
    }
    Certificate c = verify_decomposition(inst.graph, *r.decomposition, rooted(2));
    if (!c.pass) {
      o.fail(describe(spec) + ": " + first_violation(c));
      continue;
    }
    ++ok;
    if (i % 4 == 0) passing.emplace_back(inst.graph, *r.decomposition);
  }
  o.detail = std::to_string(ok) + "/200 verified";
  return o;
}

Outcome rooted3_suite() {
  Outcome o;
  SolveObserver obs;
  obs.on_split = std::ref(splits);
  int ok = 0;
  int per_lambda[3] = {0, 0, 0};
  double slowest = 0;
  for (int i = 0; i < 200; ++i) {
    const int lambda = 2 + 2 * (i % 3);
    // lambda 6 covers order 1 upward; the cut families start at order 3.
    const int n = lambda == 6 ? 1 + 2 * ((i / 3) % 7) : 3 + 2 * ((i / 3) % 6);
    InstanceSpec spec{6, n, static_cast<std::uint64_t>(2000 + i), 0, std::nullopt};
    if (lambda < 6) spec.exact_connectivity = lambda;
    else spec.connectivity_floor = 6;
    Instance inst = generate(spec);
    Clock::time_point t = Clock::now();
    Decomposition d = rooted_3_odd(inst.graph, &obs);
    const double took = seconds_since(t);
    slowest = std::max(slowest, took);
    Certificate c = verify_decomposition(inst.graph, d, rooted(3));
    if (!c.pass) {
      o.fail(describe(spec) + ": " + first_violation(c));
      continue;
    }
    if (took >= 2.0) {
      o.fail(describe(spec) + ": took " + std::to_string(took) + "s");
      continue;
    }
    ++ok;
    ++per_lambda[lambda / 2 - 1];
    if (i % 4 == 0) passing.emplace_back(inst.graph, d);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d/200 verified, lambda 2/4/6: %d/%d/%d, slowest %.3fs", ok, per_lambda[0],
                per_lambda[1], per_lambda[2], slowest);
  o.detail = buf;
  return o;
}

Outcome k_odd_suite() {
  Outcome o;
  int graphs = 0;
  int runs = 0;
  for (int i = 0; i < 100; ++i) {
    const int d = 1 + i % 4;
    const int n = 1 + 2 * ((i / 4) % 6);
    InstanceSpec spec{2 * d, n, static_cast<std::uint64_t>(3000 + i), 0, std::nullopt};
    Instance inst = generate(spec);
    std::vector<Trail> w = odd_circuit_witnesses(inst.graph);
    ++graphs;
    for (int k = d % 2 == 0 ? 2 : 1; k <= d; k += 2) {
      std::vector<Trail> wk(w.begin(), w.begin() + k);
      Decomposition dec = k_odd(inst.graph, k, &wk);
      Expectation e;
      e.parts = k;
      e.odd_edges = true;
      Certificate c = verify_decomposition(inst.graph, dec, e);
      if (!c.pass) o.fail(describe(spec) + " k " + std::to_string(k) + ": " + first_violation(c));
      ++runs;
    }
  }
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(runs) + " (graph, k) runs";
  return o;
}

std::vector<MultiGraph> small_eulerian_corpus() {
  std::vector<MultiGraph> out;
  for (const auto& entry : fs::directory_iterator(ODDTRAIL_CORPUS_DIR)) {
    if (entry.path().extension() != ".g") continue;
    GraphFile f = read_graph(entry.path().string());
    if (f.graph.size() <= 12 && is_eulerian_subgraph(f.graph, f.graph.all_edges())) out.push_back(f.graph);
  }
  std::mt19937_64 rng(97);
  while (out.size() < 400) out.push_back(random_eulerian(rng, 7, 12));
  return out;
}

Outcome rooted2_oracle() {
  Outcome o;
  int present = 0;
  int n = 0;
  int disagreements = 0;
  for (const MultiGraph& g : small_eulerian_corpus()) {
    ++n;
    Rooted2Result r = rooted_2_odd(g);
    bool oracle = brute_force_exists(g, OracleQuery{2, true, std::nullopt, false, 18}).has_value();
    if (r.decomposition.has_value() != oracle) {
      ++disagreements;
      o.fail("disagreement on " + format_graph(GraphFile{g, std::vector<int>(g.size(), 1), false}));
    }
    if (r.decomposition && !verify_decomposition(g, *r.decomposition, rooted(2)).pass) o.fail("invalid witness");
    present += oracle;
  }
  o.detail = std::to_string(n) + " instances, " + std::to_string(present) + " present, " + std::to_string(disagreements) +
             " disagreements";
  return o;
}

Outcome signed_suite() {
  Outcome o;
  SolveObserver obs;
  obs.on_split = std::ref(splits);
  int ok = 0;
  int skipped = 0;
  for (std::uint64_t seed = 4000; ok < 100 && seed < 6000; ++seed) {
    const int n = 1 + 2 * static_cast<int>(seed % 6);
    InstanceSpec spec{6, n, seed, 6, std::nullopt, SignRule::kRandomOddParity};
    Instance inst = generate(spec);
    SignedGraph g{inst.graph, inst.sign};
    std::optional<std::pair<Trail, Trail>> w = two_disjoint_unbalanced_circuits(g);
    if (!w) {
      ++skipped;
      continue;
    }
    if (sign_product(g, w->first) > 0 || sign_product(g, w->second) > 0 ||
        edge_difference(w->first.edge_ids(), w->second.edge_ids()) != w->first.edge_ids()) {
      o.fail(describe(spec) + ": bad witnesses");
      continue;
    }
    Decomposition d = signed_rooted_3_odd(g, w, &obs);
    Certificate c = verify_decomposition(g.graph, d, rooted(3, true), g.sign);
    if (!c.pass) {
      o.fail(describe(spec) + ": " + first_violation(c));
      continue;
    }
    ++ok;
  }
  if (ok < 100) o.fail("only " + std::to_string(ok) + " instances solved");
  o.detail = std::to_string(ok) + "/100 verified, " + std::to_string(skipped) + " generated graphs lacked witnesses";
  return o;
}

Outcome splitting() {
  Outcome o = splits.outcome;
  if (splits.events < 200) {
    o.fail("only " + std::to_string(splits.events) + " split events observed");
  }
  o.detail = std::to_string(splits.events) + " split events audited";
  return o;
}

Outcome tree_partitions() {
  Outcome o;
  int cases = 0;
  int crossed = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const MultiGraph& t : trees(n)) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexList b;
        for (int v = 0; v < n; ++v) {
          if ((mask >> v) & 1) b.push_back(v);
        }
        const int nb = static_cast<int>(b.size());
        for (int k = nb % 2 == 0 ? 2 : 1; k <= nb; k += 2) {
          std::vector<VertexList> got = tree_partition({t, b, k});
          for (VertexList& c : got) std::sort(c.begin(), c.end());
          std::sort(got.begin(), got.end());
          ++cases;
          if (!valid_tree_partition(t, b, k, got)) o.fail("invalid partition on a tree of order " + std::to_string(n));
          if (n <= 6) {
            std::vector<std::vector<VertexList>> all = all_tree_partitions(t, b, k);
            if (std::find(all.begin(), all.end(), got) == all.end()) o.fail("partition missing from enumeration");
            ++crossed;
          }
        }
      }
    }
  }
  o.detail = std::to_string(cases) + " cases, " + std::to_string(crossed) + " cross-checked by enumeration";
  return o;
}

SignedGraph random_signed(std::mt19937_64& rng, int max_n, int max_m) {
  const int n = 1 + static_cast<int>(rng() % max_n);
  const int m = static_cast<int>(rng() % (max_m + 1));
  std::vector<Endpoints> e;
  for (int i = 0; i < m; ++i) e.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
  MultiGraph g = MultiGraph::build(n, e);
  return SignedGraph{g, random_signs(rng, g.size())};
}

int product(const SignedGraph& g, const EdgeList& c) {
  int p = 1;
  for (EdgeId e : c) p *= g.sign[e];
  return p;
}

Outcome signed_calculus() {
  Outcome o;
  std::mt19937_64 rng(101);
  int switching = 0;
  int balance = 0;
  int equivalence = 0;
  for (int i = 0; i < 500; ++i) {
    SignedGraph g = random_signed(rng, 6, 10);
    VertexList u;
    for (VertexId v = 0; v < g.graph.order(); ++v) {
      if (rng() % 2) u.push_back(v);
    }
    SignedGraph s = switch_at(g, u);
    for (const EdgeList& c : brute_circuits(g.graph)) {
      if (product(g, c) != product(s, c)) o.fail("switching changed a circuit sign");
      ++switching;
    }
    BalanceCertificate cert = is_balanced(g);
    bool brute = true;
    for (const EdgeList& c : brute_circuits(g.graph)) brute = brute && product(g, c) > 0;
    if (cert.balanced != brute) o.fail("is_balanced disagrees with the circuit scan");
    if (cert.balanced) {
      VertexList minus;
      for (VertexId v = 0; v < g.graph.order(); ++v) {
        if (cert.potential[v] < 0) minus.push_back(v);
      }
      if (switch_at(g, minus).sign != std::vector<int>(g.graph.size(), 1)) o.fail("potential does not switch to positive");
    } else if (!cert.witness || sign_product(g, *cert.witness) > 0) {
      o.fail("missing unbalanced witness");
    }
    ++balance;
  }
  for (int i = 0; equivalence < 500 && i < 5000; ++i) {
    SignedGraph g = random_signed(rng, 5, 12);
    if (!is_connected(g.graph) || is_balanced(g).balanced) continue;
    std::vector<EdgeList> bad;
    for (const EdgeList& c : brute_circuits(g.graph)) {
      if (product(g, c) < 0) bad.push_back(c);
    }
    bool brute = false;
    for (std::size_t a = 0; a < bad.size() && !brute; ++a) {
      for (std::size_t b = a + 1; b < bad.size() && !brute; ++b) {
        brute = edge_difference(bad[a], bad[b]) == bad[a];
      }
    }
    const bool amply = !is_tightly_unbalanced(g).has_value();
    const bool found = two_disjoint_unbalanced_circuits(g).has_value();
    if (brute != amply) o.fail("two disjoint unbalanced circuits do not match amply unbalanced");
    if (found != brute) o.fail("two_disjoint_unbalanced_circuits disagrees with the circuit scan");
    ++equivalence;
  }
  o.detail = std::to_string(switching) + " circuit sign checks, " + std::to_string(balance) + " balance checks, " +
             std::to_string(equivalence) + " unbalanced instances for the equivalence";
  return o;
}

struct CertLine {
  std::optional<VertexId> root;  // nullopt for the unrooted line
  bool present = false;
};

Outcome corpus() {
  Outcome o;
  int files = 0;
  double slowest = 0;
  for (const auto& entry : fs::directory_iterator(ODDTRAIL_CORPUS_DIR)) {
    if (entry.path().extension() != ".cert") continue;
    ++files;
    const std::string name = entry.path().stem().string();
    GraphFile f = read_graph((entry.path().parent_path() / (name + ".g")).string());
    std::ifstream in(entry.path());
    std::string line;
    int k = 0;
    int signed_mode = 0;
    std::vector<CertLine> lines;
    while (std::getline(in, line)) {
      if (line.rfind("query:", 0) == 0) {
        std::sscanf(line.c_str(), "query: k=%d signed=%d", &k, &signed_mode);
      } else if (line.rfind("unrooted:", 0) == 0) {
        lines.push_back({std::nullopt, line.find("present") != std::string::npos});
      } else if (line.rfind("root ", 0) == 0) {
        lines.push_back({std::stoi(line.substr(5)), line.find("present") != std::string::npos});
      }
    }
    if (k == 0 || lines.empty()) {
      o.fail(name + ": unreadable certificate");
      continue;
    }
    Clock::time_point t = Clock::now();
    bool any_absent_root = false;
    bool all_roots_absent = true;
    for (const CertLine& c : lines) {
      OracleQuery q{k, c.root.has_value(), c.root, signed_mode == 1, 18};
      const bool now = brute_force_exists(f.graph, q, f.sign).has_value();
      if (now != c.present) o.fail(name + ": certificate line disagrees with the oracle");
      if (c.root) {
        any_absent_root = any_absent_root || !now;
        all_roots_absent = all_roots_absent && !now;
      }
    }
    const double took = seconds_since(t);
    slowest = std::max(slowest, took);
    if (took >= 60) o.fail(name + ": re-verification took too long");
    if (static_cast<int>(lines.size()) != f.graph.order() + 1) o.fail(name + ": certificate does not list every root");
    // The structural claims behind each instance.
    const bool six_regular_odd = f.graph.is_regular(6) && f.graph.order() % 2 == 1;
    if (name == "nonroot_vertex" && !(six_regular_odd && any_absent_root)) o.fail(name + ": claim not reproduced");
    if (name == "triangle_chain" && !(lines.front().present && all_roots_absent &&
                                      is_eulerian_subgraph(f.graph, f.graph.all_edges()))) {
      o.fail(name + ": claim not reproduced");
    }
    if (name.rfind("signed_lambda", 0) == 0) {
      const int lambda = std::stoi(name.substr(13));
      SignedGraph g{f.graph, f.sign};
      if (!(f.graph.is_regular(6) && edge_connectivity(f.graph) == lambda && negative_parity(g) == Parity::kOdd &&
            all_roots_absent)) {
        o.fail(name + ": claim not reproduced");
      }
    }
  }
  if (files < 4) o.fail("expected four certified instances, found " + std::to_string(files));
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d certificates re-derived, slowest %.2fs", files, slowest);
  o.detail = buf;
  return o;
}

Outcome mutations() {
  Outcome o;
  std::mt19937_64 rng(103);
  int caught = 0;
  int tried = 0;
  const std::size_t count = passing.size();
  if (count == 0) {
    o.fail("no passing decompositions to mutate");
    return o;
  }
  for (int i = 0; i < 100; ++i) {
    const auto& [g, dec] = passing[i % count];
    const int k = static_cast<int>(dec.parts.size());
    Decomposition m = dec;
    const int from = static_cast<int>(rng() % k);
    const int to = (from + 1 + static_cast<int>(rng() % (k - 1))) % k;
    EdgeList& src = m.parts[from];
    const std::size_t at = rng() % src.size();
    const EdgeId e = src[at];
    EdgeList& dst = m.parts[to];
    switch (i % 3) {
      case 0:  // move
        src.erase(src.begin() + static_cast<long>(at));
        dst.insert(std::lower_bound(dst.begin(), dst.end(), e), e);
        break;
      case 1:  // drop
        src.erase(src.begin() + static_cast<long>(at));
        break;
      default:  // duplicate
        dst.insert(std::lower_bound(dst.begin(), dst.end(), e), e);
        break;
    }
    Expectation ex = rooted(k);
    ++tried;
    if (verify_decomposition(g, m, ex).pass) {
      o.fail("mutation " + std::to_string(i) + " accepted");
    } else {
      ++caught;
    }
  }
  o.detail = std::to_string(caught) + "/" + std::to_string(tried) + " mutations rejected";
  return o;
}

}  // namespace

int main() {
  report(1, "rooted 2-odd on 4-regular graphs of odd order", [] {
    Clock::time_point t = Clock::now();
    Outcome o = rooted2_suite();
    if (seconds_since(t) >= 10) o.fail("over the 10 s budget");
    return o;
  });
  report(2, "rooted 3-odd on 6-regular graphs of odd order", rooted3_suite);
  report(3, "k-odd decompositions from 2-factor witnesses", k_odd_suite);
  report(4, "rooted 2-odd existence matches the exhaustive oracle", rooted2_oracle);
  report(5, "signed rooted 3-odd on 6-edge-connected signed graphs", signed_suite);
  report(6, "splitting-off invariants and lift re-verification", splitting);
  report(7, "tree partitions on all trees up to 8 vertices", tree_partitions);
  report(8, "switching, balance and the amply unbalanced equivalence", signed_calculus);
  report(9, "negative corpus certificates re-derived", corpus);
  report(10, "single-edge mutations rejected by the verifier", mutations);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
