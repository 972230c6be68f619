#include "dfsperf/oracle.hpp"

#include <cstdint>
#include <string>

namespace dfsperf::oracle {

ReachabilityMatrix reachability_closure(const StaticDigraph& g) {
  const NodeId n = g.node_count();
  if (n > kMaxClosureNodes) {
    throw LimitError("reachability oracle is limited to " + std::to_string(kMaxClosureNodes) +
                     " nodes, got " + std::to_string(n));
  }
  ReachabilityMatrix reach(n);
  const auto offsets = g.offsets();
  const auto targets = g.targets();
  for (NodeId u = 0; u < n; ++u) {
    reach.row(u).set(u);
    for (EdgeIndex i = offsets[u]; i < offsets[u + 1]; ++i) reach.row(u).set(targets[i]);
  }
  for (NodeId k = 0; k < n; ++k) {
    const auto via = reach.row(k);
    for (NodeId i = 0; i < n; ++i) {
      if (reach.row(i)[k]) reach.row(i) |= via;
    }
  }
  return reach;
}

SccLabeling scc_oracle(const StaticDigraph& g) {
  const ReachabilityMatrix reach = reachability_closure(g);
  const NodeId n = g.node_count();
  SccLabeling out{std::vector<std::int32_t>(n, -1), 0};
  for (NodeId u = 0; u < n; ++u) {
    if (out.comp_num[u] != -1) continue;
    const std::int32_t id = out.scc_count++;
    for (NodeId v = u; v < n; ++v) {
      if (reach.reaches(u, v) && reach.reaches(v, u)) out.comp_num[v] = id;
    }
  }
  return out;
}

namespace {

using EdgeMask = std::uint32_t;

struct Incidence {
  NodeId other;
  EdgeId edge;
};

// Collects, for a fixed edge (a, b), the union of edge sets of all simple
// paths from b back to a that avoid the edge itself.
class CycleEnumerator {
 public:
  explicit CycleEnumerator(const std::vector<std::vector<Incidence>>& adj) : adj_(adj) {}

  EdgeMask cycle_partners(EdgeId e, NodeId a, NodeId b) {
    excluded_ = e;
    goal_ = a;
    found_ = 0;
    extend(b, EdgeMask{1} << e, std::uint32_t{1} << b);
    return found_;
  }

 private:
  void extend(NodeId at, EdgeMask path, std::uint32_t used_nodes) {
    if (at == goal_) {
      found_ |= path;
      return;
    }
    for (const Incidence& inc : adj_[at]) {
      if (inc.edge == excluded_ || inc.other == at) continue;
      if (used_nodes & (std::uint32_t{1} << inc.other)) continue;
      extend(inc.other, path | (EdgeMask{1} << inc.edge),
             used_nodes | (std::uint32_t{1} << inc.other));
    }
  }

  const std::vector<std::vector<Incidence>>& adj_;
  EdgeId excluded_ = -1;
  NodeId goal_ = -1;
  EdgeMask found_ = 0;
};

}  // namespace

BccLabeling bcc_oracle(const StaticUndirectedGraph& g) {
  const NodeId n = g.node_count();
  const std::size_t m = g.edge_count();
  if (n > kMaxCycleNodes || m > kMaxCycleEdges) {
    throw LimitError("cycle oracle is limited to " + std::to_string(kMaxCycleNodes) + " nodes and " +
                     std::to_string(kMaxCycleEdges) + " edges, got n=" + std::to_string(n) +
                     " m=" + std::to_string(m));
  }

  // Endpoints recovered from the arc arrays; adjacency rebuilt locally.
  std::vector<NodeId> end_a(m, -1);
  std::vector<NodeId> end_b(m, -1);
  std::vector<std::vector<Incidence>> adj(n);
  const auto offsets = g.offsets();
  const auto targets = g.arc_targets();
  const auto edge_ids = g.arc_edge_ids();
  for (NodeId v = 0; v < n; ++v) {
    for (EdgeIndex i = offsets[v]; i < offsets[v + 1]; ++i) {
      const EdgeId e = edge_ids[i];
      if (end_a[e] == -1) {
        end_a[e] = v;
        end_b[e] = targets[i];
      }
      adj[v].push_back({targets[i], e});
    }
  }

  std::vector<EdgeMask> related(m, 0);
  CycleEnumerator cycles(adj);
  for (std::size_t e = 0; e < m; ++e) {
    const auto id = static_cast<EdgeId>(e);
    related[e] = EdgeMask{1} << e;
    if (end_a[e] != end_b[e]) related[e] |= cycles.cycle_partners(id, end_a[e], end_b[e]);
  }

  // Symmetry and transitivity must hold without a closure step.
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = 0; f < m; ++f) {
      if (!(related[e] >> f & 1U)) continue;
      if (!(related[f] >> e & 1U) || (related[f] & ~related[e]) != 0) {
        throw std::logic_error("simple-cycle relation is not an equivalence (edges " +
                               std::to_string(e) + ", " + std::to_string(f) + ")");
      }
    }
  }

  BccLabeling out{std::vector<std::int32_t>(m, -1), 0};
  for (std::size_t e = 0; e < m; ++e) {
    if (out.edge_comp[e] != -1) continue;
    const std::int32_t id = out.bcc_count++;
    for (std::size_t f = e; f < m; ++f) {
      if (related[e] >> f & 1U) out.edge_comp[f] = id;
    }
  }
  return out;
}

}  // namespace dfsperf::oracle
