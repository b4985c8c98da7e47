// Searches small generated instances for negative examples and writes them,
// with per-root oracle certificates, into a corpus directory.
//
//   oddtrail_corpus <dir> [--max-seeds N]

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "oddtrail/oddtrail.hpp"

namespace fs = std::filesystem;
using namespace oddtrail;

namespace {

struct Query {
  int k = 3;
  bool signed_mode = false;
};

std::string certificate(const GraphFile& f, const Query& q, const std::string& claim) {
  std::ostringstream out;
  out << "# oracle certificate\n";
  out << "claim: " << claim << "\n";
  out << "query: k=" << q.k << " signed=" << (q.signed_mode ? 1 : 0) << "\n";
  OracleQuery any{q.k, false, std::nullopt, q.signed_mode, 18};
  out << "unrooted: " << (brute_force_exists(f.graph, any, f.sign) ? "present" : "absent") << "\n";
  for (VertexId v = 0; v < f.graph.order(); ++v) {
    OracleQuery at{q.k, true, v, q.signed_mode, 18};
    out << "root " << v << ": " << (brute_force_exists(f.graph, at, f.sign) ? "present" : "absent") << "\n";
  }
  return out.str();
}

void emit(const fs::path& dir, const std::string& name, const GraphFile& f, const Query& q, const std::string& claim) {
  write_text((dir / (name + ".g")).string(), format_graph(f));
  write_text((dir / (name + ".cert")).string(), certificate(f, q, claim));
  std::cout << name << ": " << claim << "\n";
}

bool rooted_anywhere(const GraphFile& f, const Query& q) {
  OracleQuery any{q.k, true, std::nullopt, q.signed_mode, 18};
  return brute_force_exists(f.graph, any, f.sign).has_value();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discover oracle-certified negative instances"};
  std::string dir;
  int max_seeds = 4000;
  app.add_option("dir", dir, "Output directory")->required();
  app.add_option("--max-seeds", max_seeds, "Seeds tried per family");
  CLI11_PARSE(app, argc, argv);
  fs::create_directories(dir);
  int missing = 0;

  // A vertex of a 6-regular odd-order graph that roots no 3-odd decomposition.
  {
    bool found = false;
    for (int lambda : {2, 4}) {
      for (int seed = 1; seed <= max_seeds && !found; ++seed) {
        InstanceSpec spec{6, 5, static_cast<std::uint64_t>(seed), 0, lambda, SignRule::kNone};
        Instance inst = generate(spec);
        RootScan scan = scan_roots(inst.graph, 3);
        if (!scan.counterexample) continue;
        VertexId bad = 0;
        while (scan.is_root[bad]) ++bad;
        GraphFile f{inst.graph, std::vector<int>(inst.graph.size(), 1), false};
        emit(dir, "nonroot_vertex", f, {3, false},
             "vertex " + std::to_string(bad) + " of a 6-regular graph of order 5 roots no 3-odd decomposition");
        found = true;
      }
    }
    missing += !found;
  }

  // An eulerian graph with a 3-odd decomposition but no rooted one: three
  // triangles in a chain.
  {
    std::vector<Endpoints> edges{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}, {6, 4}};
    MultiGraph g = MultiGraph::build(7, edges);
    GraphFile f{g, std::vector<int>(g.size(), 1), false};
    emit(dir, "triangle_chain", f, {3, false}, "3-odd decomposition exists, rooted 3-odd does not");
  }

  // Signed 6-regular graphs of odd negative parity below 6-edge-connectivity
  // with no rooted 3-odd decomposition; amply unbalanced ones are preferred.
  for (int lambda : {2, 4}) {
    std::optional<GraphFile> fallback;
    bool found = false;
    for (int n : {3, 5}) {
      for (int seed = 1; seed <= max_seeds && !found; ++seed) {
        InstanceSpec spec{6, n, static_cast<std::uint64_t>(seed), 0, lambda, SignRule::kRandomOddParity};
        Instance inst = generate(spec);
        GraphFile f{inst.graph, inst.sign, true};
        if (rooted_anywhere(f, {3, true})) continue;
        SignedGraph sg{inst.graph, inst.sign};
        if (!two_disjoint_unbalanced_circuits(sg)) {
          if (!fallback) fallback = f;
          continue;
        }
        emit(dir, "signed_lambda" + std::to_string(lambda), f, {3, true},
             "amply unbalanced signed 6-regular graph with lambda " + std::to_string(lambda) +
                 " and no rooted 3-odd decomposition");
        found = true;
      }
    }
    if (!found && fallback) {
      emit(dir, "signed_lambda" + std::to_string(lambda), *fallback, {3, true},
           "signed 6-regular graph with lambda " + std::to_string(lambda) + " and no rooted 3-odd decomposition");
      found = true;
    }
    missing += !found;
  }
  return missing == 0 ? 0 : 1;
}
