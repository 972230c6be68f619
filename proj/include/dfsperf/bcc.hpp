#pragma once

#include "dfsperf/dfs.hpp"
#include "dfsperf/graph.hpp"

#include <cstdint>
#include <vector>

namespace dfsperf {

// Biconnected components as an edge partition. Ids are contiguous from 0 and
// assigned in the order components are closed. A self-loop is its own
// component; isolated vertices belong to none.
struct BccLabeling {
  std::vector<std::int32_t> edge_comp;
  std::int32_t bcc_count = 0;

  friend bool operator==(const BccLabeling&, const BccLabeling&) = default;
};

// Hopcroft-Tarjan over the five-hook DFS with separate DFS-number, lowpoint
// and parent-edge arrays.
BccLabeling bcc_baseline(const StaticUndirectedGraph& g, EngineKind engine = kDefaultEngine);

// Overlaid visited/DFS-number array, lowpoint returned from each descent.
// With recursive_edge_stack or iterative, arcs are copied to a shared arc
// stack on first visit. Output is identical to bcc_baseline.
BccLabeling bcc_tuned(const StaticUndirectedGraph& g, EngineKind engine = kDefaultEngine);

// Vertices incident to edges of two or more components. Self-loop components
// are ignored, so the result matches the cut-vertex definition.
std::vector<NodeId> articulation_points(const StaticUndirectedGraph& g, const BccLabeling& lab);

}  // namespace dfsperf
