// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "dfsperf/bcc.hpp"
#include "dfsperf/bench.hpp"
#include "dfsperf/large_stack.hpp"
#include "dfsperf/oracle.hpp"
#include "dfsperf/rng.hpp"
#include "dfsperf/scc.hpp"
#include "dfsperf/verify.hpp"
#include "recorder.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace dfsperf;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr int kRepeats = 11;
constexpr std::int64_t kM = std::int64_t{1} << 20;

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::printf("%s %d %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(),
              secs);
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string where(std::int64_t trial, const std::string& what) {
  return "trial " + std::to_string(trial) + ": " + what;
}

Verdict scc_oracle_agreement() {
  const auto fail = verify_scc({2000, 64, kSeed});
  if (fail) return {false, where(fail->trial, fail->what)};
  return {true, "2000 graphs, n <= 64, all implementations equal the closure oracle"};
}

Verdict exact_labeling() {
  for (std::int64_t t = 0; t < 2000; ++t) {
    const auto g = build_digraph(corpus_digraph(kSeed, t, 64));
    const auto ref = scc_tarjan_baseline(g);
    if (scc_tarjan_tuned(g) != ref) return {false, where(t, "tarjan-tuned differs")};
    if (scc_cmg_baseline(g) != ref) return {false, where(t, "cmg-baseline differs")};
    if (scc_cmg_tuned(g) != ref) return {false, where(t, "cmg-tuned differs")};
    if (!partitions_equal(scc_kosaraju_sharir(g), ref)) return {false, where(t, "ks partition differs")};
  }
  return {true, "2000 graphs, compNum identical across the single-pass family, KS same partition"};
}

Verdict ordering() {
  for (std::int64_t t = 0; t < 2000; ++t) {
    const auto g = build_digraph(corpus_digraph(kSeed, t, 64));
    const auto truth = oracle::scc_oracle(g);
    for (const auto& lab : {scc_tarjan_baseline(g), scc_tarjan_tuned(g), scc_cmg_baseline(g),
                            scc_cmg_tuned(g)}) {
      if (auto why = check_edge_order(g, lab, truth, true); !why.empty()) return {false, where(t, why)};
    }
    if (auto why = check_edge_order(g, scc_kosaraju_sharir(g), truth, false); !why.empty()) {
      return {false, where(t, "ks " + why)};
    }
  }
  return {true, "2000 graphs, every edge ordered as required"};
}

Verdict bcc_oracle_agreement() {
  const auto fail = verify_bcc({1000, oracle::kMaxCycleNodes, kSeed});
  if (fail) return {false, where(fail->trial, fail->what)};
  for (std::int64_t t = 0; t < 1000; ++t) {
    const auto g = build_undirected(corpus_undirected(kSeed, t, oracle::kMaxCycleNodes));
    if (bcc_baseline(g) != bcc_tuned(g)) return {false, where(t, "baseline and tuned differ")};
  }
  return {true, "1000 graphs, n <= 10, m <= 20, baseline == tuned == cycle oracle"};
}

Verdict transcripts() {
  for (std::int64_t t = 0; t < 200; ++t) {
    const auto g = build_digraph(corpus_digraph(kSeed, t, 32));
    const auto ref = testing::transcript(g, EngineKind::recursive);
    if (testing::transcript(g, EngineKind::recursive_edge_stack) != ref) {
      return {false, where(t, "recursive-edge-stack transcript differs")};
    }
    if (testing::transcript(g, EngineKind::iterative) != ref) {
      return {false, where(t, "iterative transcript differs")};
    }
  }
  return {true, "200 graphs, n <= 32, identical hook transcripts"};
}

std::vector<bench::MedianRow> timed(bench::Suite suite, std::vector<std::int64_t> densities,
                                    std::vector<std::string> algorithms) {
  bench::ExperimentSpec spec;
  spec.suite = suite;
  spec.m_total = kM;
  spec.densities = std::move(densities);
  spec.seed = kSeed;
  spec.repeats = kRepeats;
  spec.algorithms = std::move(algorithms);
  return bench::medians(bench::run_suite(spec));
}

double need(const std::vector<bench::MedianRow>& rows, const char* algo, std::int64_t density) {
  const auto v = bench::median_of(rows, algo, kM / density, kM);
  if (!v) throw std::runtime_error(std::string("no timing for ") + algo);
  return *v;
}

Verdict ablation() {
  const auto rows = timed(bench::Suite::ablation, {10},
                          {"cmg_baseline", "cmg_overlay", "cmg_overlay_edgestack",
                           "tarjan_baseline", "tarjan_overlay", "tarjan_overlay_edgestack"});
  bool ok = true;
  std::string detail;
  for (const char* family : {"cmg", "tarjan"}) {
    const std::string f = family;
    const double base = need(rows, (f + "_baseline").c_str(), 10);
    const double overlay = need(rows, (f + "_overlay").c_str(), 10);
    const double edge = need(rows, (f + "_overlay_edgestack").c_str(), 10);
    ok = ok && overlay <= 0.85 * base && edge <= 1.05 * overlay;
    detail += f + " ns/edge base " + fmt(base) + " overlay " + fmt(overlay) + " (x" +
              fmt(overlay / base) + ") +edgestack " + fmt(edge) + " (x" + fmt(edge / overlay) +
              "); ";
  }
  detail += "need overlay <= 0.85 base, +edgestack <= 1.05 overlay";
  return {ok, detail};
}

Verdict density_trend() {
  const std::vector<std::int64_t> ds = {2, 4, 8, 16, 32};
  const auto rows = timed(bench::Suite::density, ds, {"cmg_tuned"});
  bool ok = true;
  std::string detail = "cmg_tuned ns/edge";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const double v = need(rows, "cmg_tuned", ds[i]);
    detail += " m/n=" + std::to_string(ds[i]) + ":" + fmt(v);
    for (std::size_t j = 0; j < i; ++j) ok = ok && v <= 1.10 * need(rows, "cmg_tuned", ds[j]);
  }
  return {ok, detail + "; need non-increasing within 10%"};
}

Verdict ranking() {
  const auto rows = timed(bench::Suite::density, {10},
                          {"dfs_scan", "tarjan_tuned", "cmg_tuned", "ks_with_reverse"});
  const double scan = need(rows, "dfs_scan", 10);
  const double tarjan = need(rows, "tarjan_tuned", 10);
  const double cmg = need(rows, "cmg_tuned", 10);
  const double ks = need(rows, "ks_with_reverse", 10);
  const bool ok = scan <= 1.05 * tarjan && std::abs(tarjan - cmg) <= 0.15 * std::min(tarjan, cmg) &&
                  ks >= 1.5 * cmg;
  return {ok, "ns/edge scan " + fmt(scan) + " tarjan " + fmt(tarjan) + " cmg " + fmt(cmg) +
                  " ks+reverse " + fmt(ks) + "; scan/tarjan x" + fmt(scan / tarjan) +
                  ", |tarjan-cmg|/min " + fmt(std::abs(tarjan - cmg) / std::min(tarjan, cmg)) +
                  ", ks/cmg x" + fmt(ks / cmg)};
}

Verdict scale() {
  constexpr NodeId n = NodeId{1} << 21;
  constexpr std::size_t m = std::size_t{1} << 24;
  const auto g = build_digraph(random_digraph(n, m, kSeed));
  SccLabeling lab;
  double secs = 0;
  // A 1 MiB thread stack: the iterative engine must not depend on call depth.
  run_with_stack(std::size_t{1} << 20, [&] {
    const auto start = std::chrono::steady_clock::now();
    lab = scc_cmg_tuned(g, EngineKind::iterative);
    secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  if (auto why = check_label_range(lab.comp_num, lab.scc_count); !why.empty()) return {false, why};

  // "Same SCC" comes from an independent algorithm.
  const auto truth = scc_kosaraju_sharir(g);
  if (truth.scc_count != lab.scc_count) return {false, "component count differs from KS"};
  SplitMix64 rng(kSeed);
  const auto offsets = g.offsets();
  const auto targets = g.targets();
  for (int i = 0; i < 100000; ++i) {
    const auto e = static_cast<EdgeIndex>(rng.below(m));
    const auto u = static_cast<NodeId>(
        std::upper_bound(offsets.begin(), offsets.end(), e) - offsets.begin() - 1);
    const NodeId v = targets[e];
    const bool same = truth.comp_num[u] == truth.comp_num[v];
    const std::int32_t cu = lab.comp_num[u];
    const std::int32_t cv = lab.comp_num[v];
    if (same ? cu != cv : cu <= cv) {
      return {false, "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") violates the order"};
    }
  }
  return {secs < 60.0, "n=2^21 m=2^24 on a 1 MiB stack, " + std::to_string(lab.scc_count) +
                           " components in " + fmt(secs) + "s, 10^5 sampled edges ordered"};
}

}  // namespace

int main() {
  report(1, "SCC oracle agreement", scc_oracle_agreement);
  report(2, "exact labeling equivalence", exact_labeling);
  report(3, "ordering invariants", ordering);
  report(4, "BCC oracle agreement", bcc_oracle_agreement);
  report(5, "engine transcript equivalence", transcripts);
  report(6, "optimization ablation", ablation);
  report(7, "density trend", density_trend);
  report(8, "algorithm ranking", ranking);
  report(9, "scale smoke test", scale);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
