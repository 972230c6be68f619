#include "dfsperf/scc.hpp"

#include "dfsperf/scc_tuned.hpp"

#include <stdexcept>
#include <unordered_map>

namespace dfsperf {

std::string_view to_string(EngineKind e) noexcept {
  switch (e) {
    case EngineKind::recursive:
      return "recursive";
    case EngineKind::recursive_edge_stack:
      return "recursive-edge-stack";
    case EngineKind::iterative:
      return "iterative";
  }
  return "?";
}

std::optional<EngineKind> parse_engine(std::string_view name) noexcept {
  if (name == "recursive") return EngineKind::recursive;
  if (name == "recursive-edge-stack") return EngineKind::recursive_edge_stack;
  if (name == "iterative") return EngineKind::iterative;
  return std::nullopt;
}

namespace {

// Textbook formulation, one array per node attribute.
class TarjanHooks {
 public:
  explicit TarjanHooks(NodeId n)
      : visited_(n, 0),
        dfs_num_(n, 0),
        low_point_(n, 0),
        is_open_(n, 0),
        comp_num_(n, -1),
        open_(n) {}

  void init() {
    dfs_count_ = 0;
    scc_count_ = 0;
  }

  bool is_unvisited(NodeId v) const { return !visited_[v]; }

  void tree_edge(NodeId v) {
    visited_[v] = 1;
    dfs_num_[v] = dfs_count_++;
    low_point_[v] = v;
    open_.push(v);
    is_open_[v] = 1;
  }

  void non_tree_edge(NodeId u, NodeId v) {
    if (is_open_[v] && dfs_num_[v] < dfs_num_[low_point_[u]]) low_point_[u] = v;
  }

  void finish_tree_edge(NodeId u, NodeId v) {
    if (dfs_num_[low_point_[v]] < dfs_num_[low_point_[u]]) low_point_[u] = low_point_[v];
  }

  void finish_node(NodeId v) {
    if (low_point_[v] == v) {
      NodeId u;
      do {
        u = open_.pop();
        is_open_[u] = 0;
        comp_num_[u] = scc_count_;
      } while (u != v);
      ++scc_count_;
    }
  }

  SccLabeling result() && { return {std::move(comp_num_), scc_count_}; }

 private:
  std::vector<char> visited_;
  std::vector<std::int32_t> dfs_num_;
  std::vector<NodeId> low_point_;
  std::vector<char> is_open_;
  std::vector<std::int32_t> comp_num_;
  BoundedStack<NodeId> open_;
  std::int32_t dfs_count_ = 0;
  std::int32_t scc_count_ = 0;
};

// roots is a subsequence of open and partitions it into the open
// components of the explored subgraph.
class CmgHooks {
 public:
  explicit CmgHooks(NodeId n)
      : visited_(n, 0), dfs_num_(n, 0), is_open_(n, 0), comp_num_(n, -1), roots_(n), open_(n) {}

  void init() {
    dfs_count_ = 0;
    scc_count_ = 0;
  }

  bool is_unvisited(NodeId v) const { return !visited_[v]; }

  void tree_edge(NodeId v) {
    visited_[v] = 1;
    dfs_num_[v] = dfs_count_++;
    roots_.push(v);
    open_.push(v);
    is_open_[v] = 1;
  }

  void non_tree_edge(NodeId, NodeId v) {
    if (is_open_[v]) {
      while (dfs_num_[v] < dfs_num_[roots_.top()]) roots_.pop();
    }
  }

  void finish_tree_edge(NodeId, NodeId) {}

  void finish_node(NodeId v) {
    if (v == roots_.top()) {
      roots_.pop();
      NodeId u;
      do {
        u = open_.pop();
        is_open_[u] = 0;
        comp_num_[u] = scc_count_;
      } while (u != v);
      ++scc_count_;
    }
  }

  SccLabeling result() && { return {std::move(comp_num_), scc_count_}; }

 private:
  std::vector<char> visited_;
  std::vector<std::int32_t> dfs_num_;
  std::vector<char> is_open_;
  std::vector<std::int32_t> comp_num_;
  BoundedStack<NodeId> roots_;
  BoundedStack<NodeId> open_;
  std::int32_t dfs_count_ = 0;
  std::int32_t scc_count_ = 0;
};

SccLabeling unlabeled(const StaticDigraph& g) {
  return {std::vector<std::int32_t>(g.node_count(), -1), 0};
}

}  // namespace

SccLabeling scc_kosaraju_sharir(const StaticDigraph& g, EngineKind engine) {
  return scc_kosaraju_sharir(g, reverse(g), engine);
}

SccLabeling scc_kosaraju_sharir(const StaticDigraph& g, const StaticDigraph& reversed,
                                EngineKind engine) {
  if (reversed.node_count() != g.node_count() || reversed.edge_count() != g.edge_count()) {
    throw std::invalid_argument("reverse graph does not match the input graph");
  }
  SccLabeling out = unlabeled(g);
  std::span<std::int32_t> labels(out.comp_num);
  out.scc_count = tuned::run_kosaraju_sharir(g, reversed, labels, engine);
  return out;
}

SccLabeling scc_tarjan_baseline(const StaticDigraph& g, EngineKind engine) {
  TarjanHooks hooks(g.node_count());
  dfs_all(g, hooks, engine);
  return std::move(hooks).result();
}

SccLabeling scc_cmg_baseline(const StaticDigraph& g, EngineKind engine) {
  CmgHooks hooks(g.node_count());
  dfs_all(g, hooks, engine);
  return std::move(hooks).result();
}

SccLabeling scc_tarjan_tuned(const StaticDigraph& g, EngineKind engine) {
  SccLabeling out = unlabeled(g);
  std::span<std::int32_t> labels(out.comp_num);
  out.scc_count = tuned::run_tarjan(g, labels, engine);
  return out;
}

SccLabeling scc_cmg_tuned(const StaticDigraph& g, EngineKind engine) {
  SccLabeling out = unlabeled(g);
  std::span<std::int32_t> labels(out.comp_num);
  out.scc_count = tuned::run_cmg(g, labels, engine);
  return out;
}

std::int64_t dfs_scan(const StaticDigraph& g, EngineKind engine) {
  std::vector<std::int32_t> labels(g.node_count(), -1);
  std::span<std::int32_t> view(labels);
  return tuned::run_scan(g, view, engine);
}

std::int32_t canonicalize(std::span<std::int32_t> labels) {
  std::unordered_map<std::int32_t, std::int32_t> seen;
  for (std::int32_t& x : labels) {
    auto it = seen.try_emplace(x, static_cast<std::int32_t>(seen.size())).first;
    x = it->second;
  }
  return static_cast<std::int32_t>(seen.size());
}

bool same_partition(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("labelings have different lengths (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  std::vector<std::int32_t> ca(a.begin(), a.end());
  std::vector<std::int32_t> cb(b.begin(), b.end());
  canonicalize(ca);
  canonicalize(cb);
  return ca == cb;
}

bool partitions_equal(const SccLabeling& a, const SccLabeling& b) {
  return same_partition(a.comp_num, b.comp_num);
}

}  // namespace dfsperf
