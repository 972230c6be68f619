#include "dfsperf/verify.hpp"

#include "dfsperf/bcc.hpp"
#include "dfsperf/oracle.hpp"
#include "dfsperf/rng.hpp"

#include <algorithm>
#include <array>

namespace dfsperf {

namespace {

constexpr std::array kEngines = {EngineKind::recursive, EngineKind::recursive_edge_stack,
                                 EngineKind::iterative};

SplitMix64 trial_rng(std::uint64_t seed, std::int64_t trial) {
  SplitMix64 mix(seed ^ (static_cast<std::uint64_t>(trial) * 0xd1b54a32d192ed03ULL));
  return SplitMix64(mix.next());
}

std::string engine_tag(EngineKind e) { return " [" + std::string(to_string(e)) + "]"; }

}  // namespace

EdgeList corpus_digraph(std::uint64_t seed, std::int64_t trial, NodeId max_n) {
  SplitMix64 rng = trial_rng(seed, trial);
  const auto n = static_cast<NodeId>(1 + rng.below(static_cast<std::uint64_t>(max_n)));
  const auto m = static_cast<std::size_t>(rng.below(4 * static_cast<std::uint64_t>(n) + 1));
  return random_digraph(n, m, rng.next());
}

EdgeList corpus_undirected(std::uint64_t seed, std::int64_t trial, NodeId max_n) {
  SplitMix64 rng = trial_rng(seed, trial);
  const auto n = static_cast<NodeId>(1 + rng.below(static_cast<std::uint64_t>(max_n)));
  const std::uint64_t max_m = std::min<std::uint64_t>(2 * static_cast<std::uint64_t>(n), 20);
  const auto m = static_cast<std::size_t>(rng.below(max_m + 1));
  return random_undirected(n, m, rng.next());
}

std::string check_label_range(std::span<const std::int32_t> labels, std::int32_t count) {
  std::vector<char> used(std::max<std::int32_t>(count, 0), 0);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0 || labels[v] >= count) {
      return "label " + std::to_string(labels[v]) + " at index " + std::to_string(v) +
             " outside [0, " + std::to_string(count) + ")";
    }
    used[labels[v]] = 1;
  }
  const auto unused = std::find(used.begin(), used.end(), 0);
  if (unused != used.end()) {
    return "component id " + std::to_string(unused - used.begin()) + " never used";
  }
  return {};
}

std::string check_edge_order(const StaticDigraph& g, const SccLabeling& lab,
                             const SccLabeling& truth, bool reverse_topological) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.out(u)) {
      const std::int32_t cu = lab.comp_num[u];
      const std::int32_t cv = lab.comp_num[v];
      const bool same = truth.comp_num[u] == truth.comp_num[v];
      const bool ok = same ? cu == cv : (reverse_topological ? cu > cv : cu < cv);
      if (!ok) {
        return "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has labels " +
               std::to_string(cu) + ", " + std::to_string(cv) +
               (same ? " but joins one component" : " in the wrong order");
      }
    }
  }
  return {};
}

std::optional<VerifyFailure> verify_scc(const VerifyOptions& opts) {
  for (std::int64_t t = 0; t < opts.trials; ++t) {
    EdgeList el = corpus_digraph(opts.seed, t, opts.max_n);
    const StaticDigraph g = build_digraph(el);
    const SccLabeling truth = oracle::scc_oracle(g);
    auto fail = [&](std::string what) {
      return VerifyFailure{t, std::move(el), std::move(what)};
    };

    const SccLabeling tarjan_base = scc_tarjan_baseline(g);
    struct Named {
      std::string name;
      SccLabeling lab;
      bool single_pass;
    };
    std::vector<Named> runs;
    runs.push_back({"tarjan-baseline", tarjan_base, true});
    runs.push_back({"cmg-baseline", scc_cmg_baseline(g), true});
    for (EngineKind e : kEngines) {
      runs.push_back({"ks" + engine_tag(e), scc_kosaraju_sharir(g, e), false});
      runs.push_back({"tarjan-tuned" + engine_tag(e), scc_tarjan_tuned(g, e), true});
      runs.push_back({"cmg-tuned" + engine_tag(e), scc_cmg_tuned(g, e), true});
    }

    for (const Named& r : runs) {
      if (auto why = check_label_range(r.lab.comp_num, r.lab.scc_count); !why.empty()) {
        return fail(r.name + ": " + why);
      }
      if (!partitions_equal(r.lab, truth)) return fail(r.name + ": partition differs from oracle");
      if (r.lab.scc_count != truth.scc_count) return fail(r.name + ": component count differs");
      if (r.single_pass && r.lab.comp_num != tarjan_base.comp_num) {
        return fail(r.name + ": numbering differs from tarjan-baseline");
      }
      if (auto why = check_edge_order(g, r.lab, truth, r.single_pass); !why.empty()) {
        return fail(r.name + ": " + why);
      }
    }
    if (dfs_scan(g) != g.node_count()) return fail("dfs-scan did not visit every node");
  }
  return std::nullopt;
}

std::optional<VerifyFailure> verify_bcc(const VerifyOptions& opts) {
  for (std::int64_t t = 0; t < opts.trials; ++t) {
    EdgeList el = corpus_undirected(opts.seed, t, opts.max_n);
    const StaticUndirectedGraph g = build_undirected(el);
    const BccLabeling truth = oracle::bcc_oracle(g);
    auto fail = [&](std::string what) {
      return VerifyFailure{t, std::move(el), std::move(what)};
    };

    const BccLabeling base = bcc_baseline(g);
    for (EngineKind e : kEngines) {
      const std::string tag = engine_tag(e);
      const BccLabeling b = bcc_baseline(g, e);
      const BccLabeling tuned = bcc_tuned(g, e);
      for (const auto* lab : {&b, &tuned}) {
        const std::string name = (lab == &b ? "bcc-baseline" : "bcc-tuned") + tag;
        if (auto why = check_label_range(lab->edge_comp, lab->bcc_count); !why.empty()) {
          return fail(name + ": " + why);
        }
        if (!same_partition(lab->edge_comp, truth.edge_comp)) {
          return fail(name + ": edge partition differs from oracle");
        }
        if (lab->edge_comp != base.edge_comp) {
          return fail(name + ": numbering differs from iterative baseline");
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace dfsperf
