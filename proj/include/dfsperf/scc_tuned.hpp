#pragma once

// Tuned SCC kernels, generic over the label array so tests can observe every
// label write. Production callers pass std::span<std::int32_t>.

#include "dfsperf/bounded_stack.hpp"
#include "dfsperf/dfs.hpp"
#include "dfsperf/graph.hpp"

#include <cstdint>

namespace dfsperf::tuned {

// Cheriyan-Mehlhorn-Gabow label encoding:
//   -1   unvisited
//   <=-2 open; negated DFS order counting down from -2, so u precedes v iff label[u] > label[v]
//   >=0  closed; component id
template <class Labels>
class CmgClient {
 public:
  struct Frame {
    NodeId node;
    std::int32_t dfs_num;
  };
  using Result = NoResult;

  CmgClient(Labels& labels, NodeId n) : label_(labels), roots_(n), open_(n) {}

  Frame enter(NodeId v) {
    const std::int32_t dfs_num = --dfs_count_;
    label_[v] = dfs_num;
    roots_.push_unchecked(dfs_num);
    open_.push_unchecked(v);
    return {v, dfs_num};
  }

  bool scan(Frame&, NodeId w) {
    const std::int32_t d = label_[w];
    if (d >= 0) return false;
    if (d == -1) return true;
    while (roots_.top() < d) roots_.pop();
    return false;
  }

  void returned(Frame&, NoResult) {}

  NoResult leave(Frame& f) {
    if (roots_.top() == f.dfs_num) {
      NodeId u;
      do {
        u = open_.pop();
        label_[u] = scc_count_;
      } while (u != f.node);
      roots_.pop();
      ++scc_count_;
    }
    return {};
  }

  std::int32_t scc_count() const noexcept { return scc_count_; }

 private:
  Labels& label_;
  BoundedStack<std::int32_t> roots_;
  BoundedStack<NodeId> open_;
  std::int32_t dfs_count_ = -1;
  std::int32_t scc_count_ = 0;
};

// Tarjan label encoding:
//   -1   unvisited
//   <-1  open; DFS order counting up from -(n+1), so u precedes v iff label[u] < label[v]
//   >=0  closed; component id
// The lowpoint lives in the frame and is returned to the parent.
template <class Labels>
class TarjanClient {
 public:
  struct Frame {
    NodeId node;
    std::int32_t dfs_num;
    std::int32_t low;
  };
  using Result = std::int32_t;

  TarjanClient(Labels& labels, NodeId n)
      : label_(labels), open_(n), dfs_count_(-(static_cast<std::int32_t>(n) + 1)) {}

  Frame enter(NodeId v) {
    const std::int32_t dfs_num = dfs_count_++;
    label_[v] = dfs_num;
    open_.push_unchecked(v);
    return {v, dfs_num, dfs_num};
  }

  bool scan(Frame& f, NodeId w) {
    const std::int32_t d = label_[w];
    if (d == -1) return true;
    if (d < f.low) f.low = d;
    return false;
  }

  void returned(Frame& f, std::int32_t child_low) {
    if (child_low < f.low) f.low = child_low;
  }

  std::int32_t leave(Frame& f) {
    if (f.dfs_num == f.low) {
      NodeId u;
      do {
        u = open_.pop();
        label_[u] = scc_count_;
      } while (u != f.node);
      ++scc_count_;
    }
    return f.low;
  }

  std::int32_t scc_count() const noexcept { return scc_count_; }

 private:
  Labels& label_;
  BoundedStack<NodeId> open_;
  std::int32_t dfs_count_;
  std::int32_t scc_count_ = 0;
};

// Kosaraju-Sharir first pass: -1 -> -2 on visit, node id pushed on finish.
template <class Labels>
class FinishOrderClient {
 public:
  struct Frame {
    NodeId node;
  };
  using Result = NoResult;

  FinishOrderClient(Labels& labels, NodeId n) : label_(labels), order_(n) {}

  Frame enter(NodeId v) {
    label_[v] = -2;
    return {v};
  }
  bool scan(Frame&, NodeId w) { return label_[w] == -1; }
  void returned(Frame&, NoResult) {}
  NoResult leave(Frame& f) {
    order_.push_unchecked(f.node);
    return {};
  }

  BoundedStack<NodeId>& order() noexcept { return order_; }

 private:
  Labels& label_;
  BoundedStack<NodeId> order_;
};

// Kosaraju-Sharir second pass on the reverse graph: -2 -> component id.
template <class Labels>
class ReverseLabelClient {
 public:
  struct Frame {
    NodeId node;
  };
  using Result = NoResult;

  explicit ReverseLabelClient(Labels& labels) : label_(labels) {}

  Frame enter(NodeId v) {
    label_[v] = scc_count_;
    return {v};
  }
  bool scan(Frame&, NodeId w) { return label_[w] == -2; }
  void returned(Frame&, NoResult) {}
  NoResult leave(Frame&) { return {}; }

  void close_component() noexcept { ++scc_count_; }
  std::int32_t scc_count() const noexcept { return scc_count_; }

 private:
  Labels& label_;
  std::int32_t scc_count_ = 0;
};

template <class Labels>
class ScanClient {
 public:
  struct Frame {
    NodeId node;
  };
  using Result = NoResult;

  explicit ScanClient(Labels& labels) : label_(labels) {}

  Frame enter(NodeId v) {
    label_[v] = 0;
    ++visited_;
    return {v};
  }
  bool scan(Frame&, NodeId w) { return label_[w] == -1; }
  void returned(Frame&, NoResult) {}
  NoResult leave(Frame&) { return {}; }

  std::int64_t visited() const noexcept { return visited_; }

 private:
  Labels& label_;
  std::int64_t visited_ = 0;
};

// Each runner expects labels[v] == -1 for all v on entry and returns the
// number of components (or visited nodes for scan).

template <class Labels>
std::int32_t run_cmg(const StaticDigraph& g, Labels& labels, EngineKind engine) {
  const NodeId n = g.node_count();
  CmgClient<Labels> client(labels, n);
  TraversalScratch<StaticDigraph, CmgClient<Labels>> scratch(g, engine);
  for (NodeId v = 0; v < n; ++v) {
    if (labels[v] == -1) traverse(g, client, v, engine, scratch);
  }
  return client.scc_count();
}

template <class Labels>
std::int32_t run_tarjan(const StaticDigraph& g, Labels& labels, EngineKind engine) {
  const NodeId n = g.node_count();
  TarjanClient<Labels> client(labels, n);
  TraversalScratch<StaticDigraph, TarjanClient<Labels>> scratch(g, engine);
  for (NodeId v = 0; v < n; ++v) {
    if (labels[v] == -1) traverse(g, client, v, engine, scratch);
  }
  return client.scc_count();
}

template <class Labels>
std::int32_t run_kosaraju_sharir(const StaticDigraph& g, const StaticDigraph& reversed,
                                 Labels& labels, EngineKind engine) {
  const NodeId n = g.node_count();
  FinishOrderClient<Labels> first(labels, n);
  {
    TraversalScratch<StaticDigraph, FinishOrderClient<Labels>> scratch(g, engine);
    for (NodeId v = 0; v < n; ++v) {
      if (labels[v] == -1) traverse(g, first, v, engine, scratch);
    }
  }

  ReverseLabelClient<Labels> second(labels);
  TraversalScratch<StaticDigraph, ReverseLabelClient<Labels>> scratch(reversed, engine);
  auto& order = first.order();
  while (!order.empty()) {
    const NodeId v = order.pop();
    if (labels[v] == -2) {
      traverse(reversed, second, v, engine, scratch);
      second.close_component();
    }
  }
  return second.scc_count();
}

template <class Labels>
std::int64_t run_scan(const StaticDigraph& g, Labels& labels, EngineKind engine) {
  const NodeId n = g.node_count();
  ScanClient<Labels> client(labels);
  TraversalScratch<StaticDigraph, ScanClient<Labels>> scratch(g, engine);
  for (NodeId v = 0; v < n; ++v) {
    if (labels[v] == -1) traverse(g, client, v, engine, scratch);
  }
  return client.visited();
}

}  // namespace dfsperf::tuned
