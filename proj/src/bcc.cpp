#include "dfsperf/bcc.hpp"

#include "dfsperf/bounded_stack.hpp"

#include <algorithm>
#include <span>

namespace dfsperf {

namespace {

constexpr EdgeId kNoEdge = -1;

class BccHooks {
 public:
  explicit BccHooks(const StaticUndirectedGraph& g)
      : visited_(g.node_count(), 0),
        dfs_num_(g.node_count(), 0),
        low_(g.node_count(), 0),
        parent_edge_(g.node_count(), kNoEdge),
        edge_comp_(g.edge_count(), -1),
        edge_stack_(g.edge_count()) {}

  void init() {
    dfs_count_ = 0;
    bcc_count_ = 0;
  }

  bool is_unvisited(NodeId v) const { return !visited_[v]; }

  void descend(NodeId, Arc a) {
    next_parent_ = a.edge;
    edge_stack_.push(a.edge);
  }

  void tree_edge(NodeId v) {
    visited_[v] = 1;
    dfs_num_[v] = low_[v] = dfs_count_++;
    parent_edge_[v] = next_parent_;
    next_parent_ = kNoEdge;
  }

  void non_tree_edge(NodeId u, Arc a) {
    if (a.target == u) {
      if (edge_comp_[a.edge] == -1) edge_comp_[a.edge] = bcc_count_++;
      return;
    }
    if (a.edge == parent_edge_[u]) return;
    // Back edge seen from its lower endpoint; the ancestor side skips it.
    if (dfs_num_[a.target] < dfs_num_[u]) {
      edge_stack_.push(a.edge);
      low_[u] = std::min(low_[u], dfs_num_[a.target]);
    }
  }

  void finish_tree_edge(NodeId u, Arc a) {
    const NodeId w = a.target;
    low_[u] = std::min(low_[u], low_[w]);
    if (low_[w] >= dfs_num_[u]) {
      EdgeId e;
      do {
        e = edge_stack_.pop();
        edge_comp_[e] = bcc_count_;
      } while (e != a.edge);
      ++bcc_count_;
    }
  }

  void finish_node(NodeId) {}

  BccLabeling result() && { return {std::move(edge_comp_), bcc_count_}; }

 private:
  std::vector<char> visited_;
  std::vector<std::int32_t> dfs_num_;
  std::vector<std::int32_t> low_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::int32_t> edge_comp_;
  BoundedStack<EdgeId> edge_stack_;
  EdgeId next_parent_ = kNoEdge;
  std::int32_t dfs_count_ = 0;
  std::int32_t bcc_count_ = 0;
};

// Label encoding as in tuned Tarjan: -1 unvisited, otherwise the DFS number
// counting up from -(n+1). Labels stay negative after the node finishes since
// back edges from descendants still compare against them.
class BccClient {
 public:
  struct Frame {
    NodeId node;
    std::int32_t dfs_num;
    std::int32_t low;
    EdgeId parent_edge;
    EdgeId child_edge;
  };
  using Result = std::int32_t;

  BccClient(const StaticUndirectedGraph& g, std::span<std::int32_t> labels,
            std::span<std::int32_t> edge_comp)
      : label_(labels),
        edge_comp_(edge_comp),
        edge_stack_(g.edge_count()),
        dfs_count_(-(static_cast<std::int32_t>(g.node_count()) + 1)) {}

  Frame enter(NodeId v) {
    const std::int32_t dfs_num = dfs_count_++;
    label_[v] = dfs_num;
    const EdgeId parent = next_parent_;
    next_parent_ = kNoEdge;
    return {v, dfs_num, dfs_num, parent, kNoEdge};
  }

  bool scan(Frame& f, Arc a) {
    const std::int32_t d = label_[a.target];
    if (d == -1) {
      edge_stack_.push_unchecked(a.edge);
      f.child_edge = next_parent_ = a.edge;
      return true;
    }
    if (d == f.dfs_num) {
      if (edge_comp_[a.edge] == -1) edge_comp_[a.edge] = bcc_count_++;
    } else if (a.edge != f.parent_edge && d < f.dfs_num) {
      edge_stack_.push_unchecked(a.edge);
      if (d < f.low) f.low = d;
    }
    return false;
  }

  void returned(Frame& f, std::int32_t child_low) {
    if (child_low < f.low) f.low = child_low;
    if (child_low >= f.dfs_num) {
      EdgeId e;
      do {
        e = edge_stack_.pop();
        edge_comp_[e] = bcc_count_;
      } while (e != f.child_edge);
      ++bcc_count_;
    }
  }

  std::int32_t leave(Frame& f) { return f.low; }

  std::int32_t bcc_count() const noexcept { return bcc_count_; }

 private:
  std::span<std::int32_t> label_;
  std::span<std::int32_t> edge_comp_;
  BoundedStack<EdgeId> edge_stack_;
  EdgeId next_parent_ = kNoEdge;
  std::int32_t dfs_count_;
  std::int32_t bcc_count_ = 0;
};

}  // namespace

BccLabeling bcc_baseline(const StaticUndirectedGraph& g, EngineKind engine) {
  BccHooks hooks(g);
  dfs_all(g, hooks, engine);
  return std::move(hooks).result();
}

BccLabeling bcc_tuned(const StaticUndirectedGraph& g, EngineKind engine) {
  const NodeId n = g.node_count();
  BccLabeling out{std::vector<std::int32_t>(g.edge_count(), -1), 0};
  std::vector<std::int32_t> labels(n, -1);
  BccClient client(g, labels, out.edge_comp);
  TraversalScratch<StaticUndirectedGraph, BccClient> scratch(g, engine);
  for (NodeId v = 0; v < n; ++v) {
    if (labels[v] == -1) traverse(g, client, v, engine, scratch);
  }
  out.bcc_count = client.bcc_count();
  return out;
}

std::vector<NodeId> articulation_points(const StaticUndirectedGraph& g, const BccLabeling& lab) {
  std::vector<NodeId> out;
  const auto targets = g.arc_targets();
  const auto edges = g.arc_edge_ids();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::int32_t first = -1;
    for (EdgeIndex i = g.first_item(v); i < g.last_item(v); ++i) {
      if (targets[i] == v) continue;
      const std::int32_t c = lab.edge_comp[edges[i]];
      if (first == -1) {
        first = c;
      } else if (c != first) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace dfsperf
