#pragma once

// Randomized cross-checking of every algorithm against the oracles.

#include "dfsperf/graph.hpp"
#include "dfsperf/scc.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace dfsperf {

// Deterministic corpus instance `trial` for a given seed. Digraphs have
// n uniform in [1, max_n] and m uniform in [0, 4n]; undirected graphs have
// m uniform in [0, min(2n, 20)].
EdgeList corpus_digraph(std::uint64_t seed, std::int64_t trial, NodeId max_n);
EdgeList corpus_undirected(std::uint64_t seed, std::int64_t trial, NodeId max_n);

// Empty string when the labeling satisfies the ordering contract; otherwise a
// description of the first violating edge. `reverse_topological` selects
// comp[u] >= comp[v] (single-pass family) versus comp[u] <= comp[v] (KS).
// `truth` decides "same SCC".
std::string check_edge_order(const StaticDigraph& g, const SccLabeling& lab,
                             const SccLabeling& truth, bool reverse_topological);

// Empty string when lab.comp_num uses exactly the ids [0, scc_count).
std::string check_label_range(std::span<const std::int32_t> labels, std::int32_t count);

struct VerifyOptions {
  std::int64_t trials = 0;
  NodeId max_n = 1;
  std::uint64_t seed = 1;
};

struct VerifyFailure {
  std::int64_t trial;
  EdgeList graph;
  std::string what;
};

// Runs every SCC implementation (tuned ones under all engines) against the
// closure oracle, plus exact-numbering and edge-order checks.
// Returns the first failure, if any.
std::optional<VerifyFailure> verify_scc(const VerifyOptions& opts);

// Runs both BCC implementations under all engines against the cycle oracle.
std::optional<VerifyFailure> verify_bcc(const VerifyOptions& opts);

}  // namespace dfsperf
