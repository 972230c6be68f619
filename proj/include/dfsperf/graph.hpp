#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfsperf {

// 0-based node index. Signed so that label arrays can share the type with
// negated DFS numbers.
using NodeId = std::int32_t;
using EdgeId = std::int32_t;

// Position in a flat target/arc array.
using EdgeIndex = std::uint32_t;

// -(n+1) must fit in a signed 32-bit label.
inline constexpr std::int64_t kMaxNodes = (std::int64_t{1} << 31) - 2;
inline constexpr std::int64_t kMaxEdges = (std::int64_t{1} << 31) - 1;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Edge {
  NodeId source;
  NodeId target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeList {
  NodeId n = 0;
  std::vector<Edge> edges;

  std::size_t m() const noexcept { return edges.size(); }
  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

// Adjacency-array digraph: out-edges of v are targets()[offsets()[v] .. offsets()[v+1]).
class StaticDigraph {
 public:
  using item_type = NodeId;

  StaticDigraph() : offset_(1, 0) {}
  StaticDigraph(std::vector<EdgeIndex> offsets, std::vector<NodeId> targets);

  NodeId node_count() const noexcept { return static_cast<NodeId>(offset_.size() - 1); }
  std::size_t edge_count() const noexcept { return target_.size(); }

  std::span<const EdgeIndex> offsets() const noexcept { return offset_; }
  std::span<const NodeId> targets() const noexcept { return target_; }

  std::span<const NodeId> out(NodeId v) const noexcept {
    return {target_.data() + offset_[v], target_.data() + offset_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const noexcept { return offset_[v + 1] - offset_[v]; }

  // Traversal interface shared with StaticUndirectedGraph.
  std::size_t item_count() const noexcept { return target_.size(); }
  EdgeIndex first_item(NodeId v) const noexcept { return offset_[v]; }
  EdgeIndex last_item(NodeId v) const noexcept { return offset_[v + 1]; }
  NodeId item(EdgeIndex i) const noexcept { return target_[i]; }
  static NodeId target_of(NodeId w) noexcept { return w; }

 private:
  std::vector<EdgeIndex> offset_;
  std::vector<NodeId> target_;
};

// One direction of an undirected edge.
struct Arc {
  NodeId target;
  EdgeId edge;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Every undirected edge i contributes two arcs tagged with edge id i, one in
// each endpoint's bucket (both in the same bucket for a self-loop).
class StaticUndirectedGraph {
 public:
  using item_type = Arc;

  StaticUndirectedGraph() : offset_(1, 0) {}
  StaticUndirectedGraph(std::vector<EdgeIndex> offsets, std::vector<NodeId> arc_targets,
                        std::vector<EdgeId> arc_edge_ids);

  NodeId node_count() const noexcept { return static_cast<NodeId>(offset_.size() - 1); }
  std::size_t edge_count() const noexcept { return arc_target_.size() / 2; }
  std::size_t arc_count() const noexcept { return arc_target_.size(); }

  std::span<const EdgeIndex> offsets() const noexcept { return offset_; }
  std::span<const NodeId> arc_targets() const noexcept { return arc_target_; }
  std::span<const EdgeId> arc_edge_ids() const noexcept { return arc_edge_; }

  std::size_t item_count() const noexcept { return arc_target_.size(); }
  EdgeIndex first_item(NodeId v) const noexcept { return offset_[v]; }
  EdgeIndex last_item(NodeId v) const noexcept { return offset_[v + 1]; }
  Arc item(EdgeIndex i) const noexcept { return {arc_target_[i], arc_edge_[i]}; }
  static NodeId target_of(Arc a) noexcept { return a.target; }

 private:
  std::vector<EdgeIndex> offset_;
  std::vector<NodeId> arc_target_;
  std::vector<EdgeId> arc_edge_;
};

// Counting sort by source; targets keep their input order within a bucket.
// Throws GraphError naming the first pair with an endpoint outside [0, n).
StaticDigraph build_digraph(const EdgeList& el);

// Edge (v,u) for every (u,v), stably grouped by the original target.
StaticDigraph reverse(const StaticDigraph& g);

StaticUndirectedGraph build_undirected(const EdgeList& el);

// m edges with both endpoints drawn uniformly and independently from [0, n),
// driven by SplitMix64 seeded with `seed`. Throws GraphError if n == 0 and m > 0.
EdgeList random_digraph(NodeId n, std::size_t m, std::uint64_t seed);
EdgeList random_undirected(NodeId n, std::size_t m, std::uint64_t seed);

// Text format: "n m" on the first line, then m lines "u v". LF endings.
EdgeList read_edge_list(const std::filesystem::path& path);
EdgeList parse_edge_list(std::string_view text);
void write_edge_list(const EdgeList& el, const std::filesystem::path& path);
std::string format_edge_list(const EdgeList& el);

}  // namespace dfsperf
