#include "cli.hpp"

#include "dfsperf/bcc.hpp"
#include "dfsperf/bench.hpp"
#include "dfsperf/graph.hpp"
#include "dfsperf/large_stack.hpp"
#include "dfsperf/oracle.hpp"
#include "dfsperf/scc.hpp"
#include "dfsperf/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>

namespace dfsperf::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_labels(std::span<const std::int32_t> labels, const std::string& path) {
  std::string text;
  text.reserve(labels.size() * 8);
  for (std::int32_t x : labels) {
    text += std::to_string(x);
    text += '\n';
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.close();
  if (!file) throw std::runtime_error("write error on " + path);
}

// Recursive engines run on a dedicated thread sized for depth n.
void run_engine(EngineKind engine, std::int64_t n, std::ostream& err,
                const std::function<void()>& fn) {
  if (engine == EngineKind::iterative) {
    fn();
    return;
  }
  const std::size_t bytes = recursive_stack_bytes(n);
  err << "warning: recursive engine needs up to ~" << (bytes >> 20)
      << " MiB of call stack for n=" << n << "; running on a thread of that size\n";
  run_with_stack(bytes, fn);
}

struct GenArgs {
  std::int64_t nodes = -1;
  std::int64_t edges = -1;
  std::uint64_t seed = 0;
  bool undirected = false;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.nodes < 0 || a.nodes > kMaxNodes) throw UsageError("--nodes out of range");
  if (a.edges < 0 || a.edges > kMaxEdges) throw UsageError("--edges out of range");
  if (a.nodes == 0 && a.edges > 0) throw UsageError("--nodes must be at least 1 when --edges > 0");
  const auto n = static_cast<NodeId>(a.nodes);
  const auto m = static_cast<std::size_t>(a.edges);
  const EdgeList el = a.undirected ? random_undirected(n, m, a.seed) : random_digraph(n, m, a.seed);
  write_edge_list(el, a.out);
  out << "wrote n=" << el.n << " m=" << el.m() << " to " << a.out << '\n';
  return kExitOk;
}

struct SccArgs {
  std::string algo;
  std::string in;
  std::string engine = "iterative";
  std::string out;
};

int cmd_scc(const SccArgs& a, std::ostream& out, std::ostream& err) {
  const bool recursive = a.engine == "recursive";
  const StaticDigraph g = build_digraph(read_edge_list(a.in));

  // Baselines recurse on the plain adjacency scan; tuned algorithms and KS
  // use the recursive edge-stack engine.
  SccLabeling lab;
  const bool baseline = a.algo == "tarjan" || a.algo == "cmg";
  const EngineKind engine = !recursive  ? EngineKind::iterative
                            : baseline ? EngineKind::recursive
                                       : EngineKind::recursive_edge_stack;
  run_engine(engine, g.node_count(), err, [&] {
    if (a.algo == "ks") {
      lab = scc_kosaraju_sharir(g, engine);
    } else if (a.algo == "tarjan") {
      lab = scc_tarjan_baseline(g, engine);
    } else if (a.algo == "cmg") {
      lab = scc_cmg_baseline(g, engine);
    } else if (a.algo == "tarjan-tuned") {
      lab = scc_tarjan_tuned(g, engine);
    } else {
      lab = scc_cmg_tuned(g, engine);
    }
  });
  out << "sccCount=" << lab.scc_count << '\n';
  if (!a.out.empty()) write_labels(lab.comp_num, a.out);
  return kExitOk;
}

struct BccArgs {
  std::string algo;
  std::string in;
  std::string out;
};

int cmd_bcc(const BccArgs& a, std::ostream& out) {
  const StaticUndirectedGraph g = build_undirected(read_edge_list(a.in));
  const BccLabeling lab = a.algo == "base" ? bcc_baseline(g) : bcc_tuned(g);
  out << "bccCount=" << lab.bcc_count << '\n';
  if (!a.out.empty()) write_labels(lab.edge_comp, a.out);
  return kExitOk;
}

struct VerifyArgs {
  std::int64_t trials = 0;
  std::int64_t max_n = 0;
  std::uint64_t seed = 1;
  bool bcc = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const std::int64_t cap = a.bcc ? oracle::kMaxCycleNodes : oracle::kMaxClosureNodes;
  if (a.trials < 0) throw UsageError("--trials must be non-negative");
  if (a.max_n < 1 || a.max_n > cap) {
    throw UsageError("--max-n must be in [1, " + std::to_string(cap) + "] for the " +
                     (a.bcc ? "cycle" : "closure") + " oracle");
  }
  const VerifyOptions opts{a.trials, static_cast<NodeId>(a.max_n), a.seed};
  const auto failure = a.bcc ? verify_bcc(opts) : verify_scc(opts);
  if (failure) {
    err << "trial " << failure->trial << " failed: " << failure->what << '\n';
    err << "counterexample follows on standard output\n";
    out << format_edge_list(failure->graph);
    return kExitFailure;
  }
  out << "verified " << a.trials << (a.bcc ? " bcc" : " scc") << " trials\n";
  return kExitOk;
}

struct BenchArgs {
  std::string suite;
  std::int64_t m_total = bench::kDeskEdges;
  std::uint64_t seed = 1;
  int repeats = 5;
  std::string csv;
  std::string medians;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  bench::ExperimentSpec spec;
  spec.suite = *bench::parse_suite(a.suite);
  spec.m_total = a.m_total;
  spec.seed = a.seed;
  spec.repeats = a.repeats;
  try {
    bench::validate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto records = bench::run_suite(spec);
  bench::write_csv(records, a.csv);
  const auto rows = bench::medians(records);
  if (!a.medians.empty()) bench::write_medians_csv(rows, a.medians);
  out << bench::format_medians_csv(rows);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cache-conscious DFS: SCC and BCC algorithms, oracles and benchmarks", "dfsperf"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random edge list");
  gen_cmd->add_option("--nodes", gen.nodes, "Node count")->required();
  gen_cmd->add_option("--edges", gen.edges, "Edge count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->required();
  gen_cmd->add_flag("--undirected", gen.undirected, "Interpret pairs as undirected edges");
  gen_cmd->add_option("--out", gen.out, "Output path")->required();

  SccArgs scc;
  auto* scc_cmd = app.add_subcommand("scc", "Strongly connected components of an edge list");
  scc_cmd->add_option("--algo", scc.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"ks", "tarjan", "cmg", "tarjan-tuned", "cmg-tuned"}));
  scc_cmd->add_option("--in", scc.in, "Input edge list")->required();
  scc_cmd->add_option("--engine", scc.engine, "DFS engine (recursive needs a large stack)")
      ->check(CLI::IsMember({"recursive", "iterative"}));
  scc_cmd->add_option("--out", scc.out, "Write one component id per node");

  BccArgs bcc;
  auto* bcc_cmd = app.add_subcommand("bcc", "Biconnected components of an undirected edge list");
  bcc_cmd->add_option("--algo", bcc.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"base", "tuned"}));
  bcc_cmd->add_option("--in", bcc.in, "Input edge list")->required();
  bcc_cmd->add_option("--out", bcc.out, "Write one component id per edge");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all algorithms against oracles");
  verify_cmd->add_option("--trials", verify.trials, "Number of random graphs")->required();
  verify_cmd->add_option("--max-n", verify.max_n, "Largest node count")->required();
  verify_cmd->add_option("--seed", verify.seed, "Corpus seed")->required();
  verify_cmd->add_flag("--bcc", verify.bcc, "Check biconnected components instead of SCCs");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a timing suite and write CSV");
  bench_cmd->add_option("--suite", bench_args.suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"density", "size", "ablation", "bcc"}));
  bench_cmd->add_option("--m-total", bench_args.m_total, "Edges per density grid point");
  bench_cmd->add_option("--seed", bench_args.seed, "Workload seed");
  bench_cmd->add_option("--repeats", bench_args.repeats, "Timed runs per algorithm (>= 3)");
  bench_cmd->add_option("--csv", bench_args.csv, "Per-run CSV output")->required();
  bench_cmd->add_option("--medians", bench_args.medians, "Optional medians CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*scc_cmd) return cmd_scc(scc, out, err);
    if (*bcc_cmd) return cmd_bcc(bcc, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    return cmd_bench(bench_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace dfsperf::cli
