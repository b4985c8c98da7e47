// oddtrail: odd closed-trail decompositions from the command line.
//
// Exit codes: 0 success, 1 input or precondition error, 2 certified absence,
// 3 verification failure.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "oddtrail/oddtrail.hpp"

namespace fs = std::filesystem;
using namespace oddtrail;

namespace {

enum Exit { kOk = 0, kInput = 1, kAbsent = 2, kVerifyFailed = 3 };

struct DecomposeOptions {
  std::string mode = "rooted3";
  int k = 0;
  std::string input;
  std::string output;
  std::string witnesses;
  std::string dot;
  int jobs = 1;
};

struct Outcome {
  int code = kOk;
  std::string out;  // decomposition file text on success
  std::string err;
};

Expectation expectation_for(const std::string& mode, int k) {
  if (mode == "k-odd") return {k, true, false, false};
  if (mode == "rooted2") return {2, true, false, true};
  if (mode == "rooted3") return {3, true, false, true};
  return {3, false, true, true};
}

std::string describe(const Certificate& cert) {
  std::string s;
  for (const Violation& v : cert.violations) s += "fail: " + v.condition + ": " + v.detail + "\n";
  return s;
}

Outcome decompose_one(const DecomposeOptions& o, const std::string& input, std::string* dot) {
  Outcome r;
  try {
    GraphFile f = read_graph(input);
    const MultiGraph& g = f.graph;
    Decomposition d;
    if (o.mode == "k-odd") {
      require(o.k >= 1, "k-odd mode needs --k >= 1");
      if (o.witnesses.empty()) {
        d = k_odd(g, o.k);
      } else {
        std::vector<Trail> w = read_witnesses(o.witnesses, g);
        d = k_odd(g, o.k, &w);
      }
    } else if (o.mode == "rooted2") {
      Rooted2Result res = rooted_2_odd(g);
      if (!res.decomposition) return {kAbsent, "", "absent: " + res.absence_reason + "\n"};
      d = *res.decomposition;
    } else if (o.mode == "rooted3") {
      d = rooted_3_odd(g);
    } else {
      SignedGraph sg{g, f.sign};
      std::optional<std::pair<Trail, Trail>> w;
      if (!o.witnesses.empty()) {
        std::vector<Trail> c = read_witnesses(o.witnesses, g);
        require(c.size() >= 2, "witness file needs two circuits");
        w = std::pair{c[0], c[1]};
      }
      d = signed_rooted_3_odd(sg, w);
    }
    Certificate cert = verify_decomposition(g, d, expectation_for(o.mode, o.k), f.sign);
    if (!cert.pass) return {kVerifyFailed, "", "self-check failed\n" + describe(cert)};
    r.out = format_decomposition(d, &g);
    if (dot) *dot = to_dot(f, &d);
  } catch (const Error& e) {
    r.err = std::string(to_string(e.kind())) + ": " + e.what() + "\n";
    switch (e.kind()) {
      case ErrorKind::kNotFound:
        r.code = o.mode == "k-odd" ? kAbsent : kInput;
        break;
      case ErrorKind::kTheoremViolation:
        r.code = kVerifyFailed;
        break;
      default:
        r.code = kInput;
    }
  }
  return r;
}

int run_decompose(const DecomposeOptions& o) {
  if (!fs::is_directory(o.input)) {
    std::string dot;
    Outcome r = decompose_one(o, o.input, o.dot.empty() ? nullptr : &dot);
    std::cerr << r.err;
    if (r.code != kOk) return r.code;
    if (o.output.empty()) {
      std::cout << r.out;
    } else {
      write_text(o.output, r.out);
    }
    if (!o.dot.empty()) write_text(o.dot, dot);
    return kOk;
  }

  // Batch: every *.g file in the directory, one instance per worker.
  if (o.output.empty()) {
    std::cerr << "batch mode needs --output <directory>\n";
    return kInput;
  }
  fs::create_directories(o.output);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.input)) {
    if (entry.path().extension() == ".g") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Outcome> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) results[i] = decompose_one(o, files[i], nullptr);
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, o.jobs); ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  int worst = kOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Outcome& r = results[i];
    std::cout << files[i].filename().string() << ": " << r.code << "\n";
    if (!r.err.empty()) std::cerr << files[i].filename().string() << ": " << r.err;
    if (r.code == kOk) write_text((fs::path(o.output) / files[i].stem()).string() + ".dec", r.out);
    worst = std::max(worst, r.code);
  }
  return worst;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd closed-trail decompositions of eulerian multigraphs and signed graphs"};
  app.require_subcommand(1);
  int code = kOk;

  DecomposeOptions dec;
  CLI::App* decompose = app.add_subcommand("decompose", "Decompose a graph and print the parts");
  decompose->add_option("--mode", dec.mode, "k-odd, rooted2, rooted3 or signed-rooted3")
      ->check(CLI::IsMember({"k-odd", "rooted2", "rooted3", "signed-rooted3"}));
  decompose->add_option("--k", dec.k, "Number of parts for k-odd");
  decompose->add_option("--input", dec.input, "Graph file, or a directory of *.g files")->required();
  decompose->add_option("--output", dec.output, "Decomposition file (directory in batch mode)");
  decompose->add_option("--witnesses", dec.witnesses, "Circuit file used as odd or unbalanced witnesses");
  decompose->add_option("--dot", dec.dot, "Also write a Graphviz rendering");
  decompose->add_option("--jobs", dec.jobs, "Workers for batch mode")->check(CLI::PositiveNumber);
  decompose->callback([&] { code = guarded([&] { return run_decompose(dec); }); });

  std::string v_input;
  std::string v_dec;
  int v_parts = 0;
  bool v_odd = false;
  bool v_signed = false;
  bool v_rooted = false;
  CLI::App* verify = app.add_subcommand("verify", "Check a decomposition file against a graph");
  verify->add_option("--input", v_input, "Graph file")->required();
  verify->add_option("--decomposition", v_dec, "Decomposition file")->required();
  verify->add_option("--parts", v_parts, "Expected number of parts");
  verify->add_flag("--odd", v_odd, "Every part has an odd number of edges");
  verify->add_flag("--signed-odd", v_signed, "Every part has an odd number of negative edges");
  verify->add_flag("--rooted", v_rooted, "Every part contains the root");
  verify->callback([&] {
    code = guarded([&] {
      GraphFile f = read_graph(v_input);
      Decomposition d = read_decomposition(v_dec);
      Expectation e{v_parts > 0 ? std::optional<int>(v_parts) : std::nullopt, v_odd, v_signed, v_rooted};
      Certificate cert = verify_decomposition(f.graph, d, e, f.sign);
      if (!cert.pass) {
        std::cout << describe(cert);
        return static_cast<int>(kVerifyFailed);
      }
      std::cout << "pass\n";
      return static_cast<int>(kOk);
    });
  });

  std::string a_input;
  CLI::App* analyze = app.add_subcommand("analyze", "Print structural properties of a graph");
  analyze->add_option("--input", a_input, "Graph file")->required();
  analyze->callback([&] {
    code = guarded([&] {
      GraphFile f = read_graph(a_input);
      const MultiGraph& g = f.graph;
      SignedGraph sg{g, f.sign};
      std::ostringstream out;
      out << "n: " << g.order() << "\n";
      out << "edges: " << g.size() << "\n";
      out << "degrees:";
      for (VertexId v = 0; v < g.order(); ++v) out << " " << g.degree(v);
      out << "\n";
      out << "connected: " << (g.order() > 0 && is_connected(g) ? "true" : "false") << "\n";
      out << "lambda: " << (g.order() > 0 ? edge_connectivity(g) : 0) << "\n";
      out << "bipartite: " << (bipartition(g).has_value() ? "true" : "false") << "\n";
      const bool balanced = is_balanced(sg).balanced;
      out << "balanced: " << (balanced ? "true" : "false") << "\n";
      out << "parity: " << (negative_parity(sg) == Parity::kOdd ? "odd" : "even") << "\n";
      const bool tight = !balanced && is_tightly_unbalanced(sg).has_value();
      out << "tightly_unbalanced: " << (tight ? "true" : "false") << "\n";
      out << "amply_unbalanced: " << (!balanced && !tight ? "true" : "false") << "\n";
      std::cout << out.str();
      return static_cast<int>(kOk);
    });
  });

  InstanceSpec spec;
  int exact = -1;
  std::string sign_rule = "none";
  std::string g_output;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random regular multigraph");
  gen->add_option("--degree", spec.degree, "Vertex degree (even)")->required();
  gen->add_option("--order", spec.order, "Number of vertices")->required();
  gen->add_option("--floor", spec.connectivity_floor, "Minimum edge-connectivity");
  gen->add_option("--exact-lambda", exact, "Exact edge-connectivity");
  gen->add_option("--seed", spec.seed, "Random seed");
  gen->add_option("--sign", sign_rule, "none, negative or random (odd negative count)")
      ->check(CLI::IsMember({"none", "negative", "random"}));
  gen->add_option("--retries", spec.retry_budget, "Resampling budget");
  gen->add_option("--output", g_output, "Graph file (stdout when absent)");
  gen->callback([&] {
    code = guarded([&] {
      if (exact >= 0) spec.exact_connectivity = exact;
      spec.sign = sign_rule == "negative" ? SignRule::kAllNegative
                  : sign_rule == "random" ? SignRule::kRandomOddParity
                                          : SignRule::kNone;
      Instance inst = generate(spec);
      GraphFile f{inst.graph, inst.sign, spec.sign != SignRule::kNone};
      if (!f.has_signs) f.sign.assign(inst.graph.size(), 1);
      if (g_output.empty()) {
        std::cout << format_graph(f);
      } else {
        write_text(g_output, format_graph(f));
      }
      return static_cast<int>(kOk);
    });
  });

  std::string s_input;
  int s_d = 0;
  int s_bound = 18;
  int s_jobs = 1;
  CLI::App* scan = app.add_subcommand("scan", "Check every vertex as a root by exhaustive search");
  scan->add_option("--input", s_input, "Graph file")->required();
  scan->add_option("--d", s_d, "Half the degree (2 or 3)")->required();
  scan->add_option("--bound", s_bound, "Edge bound for the exhaustive search");
  scan->add_option("--jobs", s_jobs, "Search threads")->check(CLI::PositiveNumber);
  scan->callback([&] {
    code = guarded([&] {
      GraphFile f = read_graph(s_input);
      RootScan r = scan_roots(f.graph, s_d, s_bound, s_jobs);
      for (VertexId v = 0; v < f.graph.order(); ++v) std::cout << v << ": " << (r.is_root[v] ? "true" : "false") << "\n";
      std::cerr << "counterexample: " << (r.counterexample ? "yes" : "no") << "\n";
      return static_cast<int>(kOk);
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }
  return code;
}
