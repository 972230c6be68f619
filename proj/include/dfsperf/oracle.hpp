#pragma once

// Brute-force ground truth for small graphs. Nothing in here performs a
// depth-first traversal of the input graph; SCCs come from a transitive
// closure and BCCs from exhaustive simple-cycle enumeration.

#include "dfsperf/bcc.hpp"
#include "dfsperf/graph.hpp"
#include "dfsperf/scc.hpp"

#include <bitset>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dfsperf::oracle {

inline constexpr NodeId kMaxClosureNodes = 256;
inline constexpr NodeId kMaxCycleNodes = 10;
inline constexpr std::size_t kMaxCycleEdges = 20;

class LimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ReachabilityMatrix {
 public:
  using Row = std::bitset<kMaxClosureNodes>;

  explicit ReachabilityMatrix(NodeId n) : rows_(n) {}

  NodeId size() const noexcept { return static_cast<NodeId>(rows_.size()); }
  bool reaches(NodeId u, NodeId v) const { return rows_[u][v]; }
  const Row& row(NodeId u) const { return rows_[u]; }
  Row& row(NodeId u) { return rows_[u]; }

  friend bool operator==(const ReachabilityMatrix&, const ReachabilityMatrix&) = default;

 private:
  std::vector<Row> rows_;
};

// reach[u][v] iff a directed path u => v exists (reach[u][u] always holds).
// Warshall's relaxation over the adjacency matrix. Throws LimitError above
// kMaxClosureNodes nodes.
ReachabilityMatrix reachability_closure(const StaticDigraph& g);

// Components numbered by first occurrence in node-id order.
SccLabeling scc_oracle(const StaticDigraph& g);

// Two edges are equivalent iff equal or both on some simple cycle. Classes
// numbered by first occurrence in edge-id order. Throws LimitError above
// kMaxCycleNodes nodes or kMaxCycleEdges edges, and std::logic_error if the
// enumerated relation is not an equivalence.
BccLabeling bcc_oracle(const StaticUndirectedGraph& g);

}  // namespace dfsperf::oracle
