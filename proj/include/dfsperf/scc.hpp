#pragma once

#include "dfsperf/dfs.hpp"
#include "dfsperf/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dfsperf {

struct SccLabeling {
  std::vector<std::int32_t> comp_num;
  std::int32_t scc_count = 0;

  friend bool operator==(const SccLabeling&, const SccLabeling&) = default;
};

// Two passes: finishing order on g, then labelling DFS on the reverse graph in
// decreasing finishing time. Components come out in topological order
// (comp_num[u] <= comp_num[v] for every edge (u,v)).
SccLabeling scc_kosaraju_sharir(const StaticDigraph& g, EngineKind engine = kDefaultEngine);
// Same, with the reverse graph supplied by the caller.
SccLabeling scc_kosaraju_sharir(const StaticDigraph& g, const StaticDigraph& reversed,
                                EngineKind engine = kDefaultEngine);

// Textbook single-pass algorithms written against the five-hook DFS with one
// array per piece of node data. Components come out in reverse topological
// order (comp_num[u] >= comp_num[v] for every edge (u,v)).
SccLabeling scc_tarjan_baseline(const StaticDigraph& g, EngineKind engine = kDefaultEngine);
SccLabeling scc_cmg_baseline(const StaticDigraph& g, EngineKind engine = kDefaultEngine);

// Tuned forms: all node data overlaid in the label array, lowpoints (Tarjan)
// or root DFS numbers (Cheriyan-Mehlhorn-Gabow) carried in the frame, and with
// the edge-stack engines, adjacency copied once per node.
// Numbering is identical to the baselines.
SccLabeling scc_tarjan_tuned(const StaticDigraph& g, EngineKind engine = kDefaultEngine);
SccLabeling scc_cmg_tuned(const StaticDigraph& g, EngineKind engine = kDefaultEngine);

// Visits every node with the tuned machinery and does nothing else. Lower
// bound for any DFS-based algorithm. Returns the number of visited nodes.
std::int64_t dfs_scan(const StaticDigraph& g, EngineKind engine = kDefaultEngine);

// True iff both label arrays induce the same partition of their index set.
// Throws std::invalid_argument on a length mismatch.
bool same_partition(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
bool partitions_equal(const SccLabeling& a, const SccLabeling& b);

// Relabels so that ids appear in order of first occurrence. Returns the
// number of distinct labels.
std::int32_t canonicalize(std::span<std::int32_t> labels);

}  // namespace dfsperf
