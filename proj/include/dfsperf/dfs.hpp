#pragma once

// Generic depth-first search.
//
// Two layers live here. The lower layer drives a *traversal client*: an object
// that decides, per scanned edge, whether to descend, and that owns whatever
// per-call state the algorithm keeps (its "frame"). Tuned algorithms implement
// clients directly so that frame contents are under their control (a DFS
// number, a running lowpoint). The upper layer is the classic five-hook DFS
// (init / tree_edge / non_tree_edge / finish_tree_edge / finish_node), which is
// itself expressed as a client.
//
// Three engines execute a client:
//   recursive             - one C++ call per node, scanning the adjacency
//                           array directly and resuming the scan after each
//                           descent.
//   recursive_edge_stack  - one C++ call per node; on first visit the node's
//                           out-edges are copied (in reverse) onto a shared
//                           edge stack and all later scanning pops from it.
//   iterative             - the edge-stack scheme with an explicit, heap
//                           allocated frame stack. Depth is bounded by n and
//                           never touches the thread's call stack.
//
// All engines visit roots in increasing id and edges in adjacency order, so
// they produce identical event sequences for the same client.

#include "dfsperf/bounded_stack.hpp"
#include "dfsperf/graph.hpp"

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <type_traits>

namespace dfsperf {

enum class EngineKind { recursive, recursive_edge_stack, iterative };

inline constexpr EngineKind kDefaultEngine = EngineKind::iterative;

std::string_view to_string(EngineKind e) noexcept;
std::optional<EngineKind> parse_engine(std::string_view name) noexcept;

template <class G>
concept Adjacency = requires(const G& g, NodeId v, EdgeIndex i, typename G::item_type it) {
  { g.node_count() } -> std::convertible_to<NodeId>;
  { g.item_count() } -> std::convertible_to<std::size_t>;
  { g.first_item(v) } -> std::same_as<EdgeIndex>;
  { g.last_item(v) } -> std::same_as<EdgeIndex>;
  { g.item(i) } -> std::same_as<typename G::item_type>;
  { G::target_of(it) } -> std::same_as<NodeId>;
};

template <Adjacency G>
using ItemOf = typename G::item_type;

// Pushes the out-items of v so that popping yields them in adjacency order.
// Returns the stack size before the push; v's region is everything above it.
template <Adjacency G>
std::size_t push_out_edges_reversed(const G& g, NodeId v, BoundedStack<ItemOf<G>>& edge_stack) {
  const std::size_t watermark = edge_stack.size();
  const EdgeIndex first = g.first_item(v);
  const EdgeIndex last = g.last_item(v);
  const std::size_t degree = last - first;
  if (edge_stack.free_slots() < degree) {
    throw std::logic_error("edge stack capacity exceeded");
  }
  auto* out = edge_stack.grow_unchecked(degree);
  for (EdgeIndex i = last; i > first;) *out++ = g.item(--i);
  return watermark;
}

struct NoResult {};

// enter(v)          first visit of v; returns the frame kept while v is active
// scan(frame, item) an out-item of the frame's node; true = descend into its target
// returned(frame, r) the descent started by the last scan finished with result r
// leave(frame)      all out-items scanned; the result is handed to the parent
template <class C, class Item>
concept TraversalClient = requires(C& c, typename C::Frame& f, NodeId v, Item it,
                                   typename C::Result r) {
  requires std::is_trivially_copyable_v<typename C::Frame>;
  { c.enter(v) } -> std::same_as<typename C::Frame>;
  { c.scan(f, it) } -> std::same_as<bool>;
  c.returned(f, r);
  { c.leave(f) } -> std::same_as<typename C::Result>;
};

template <Adjacency G, TraversalClient<ItemOf<G>> C>
struct TraversalEntry {
  typename C::Frame frame;
  std::size_t watermark;
};

// Scratch storage reusable across the roots of one whole-graph traversal.
// Edge stack capacity = total out-items (m, or 2m arcs); frames capacity = n.
template <Adjacency G, TraversalClient<ItemOf<G>> C>
class TraversalScratch {
 public:
  TraversalScratch(const G& g, EngineKind engine)
      : edge_stack(engine == EngineKind::recursive ? 0 : g.item_count()),
        frames(engine == EngineKind::iterative ? static_cast<std::size_t>(g.node_count()) : 0) {}

  BoundedStack<ItemOf<G>> edge_stack;
  BoundedStack<TraversalEntry<G, C>> frames;
};

namespace detail {

template <Adjacency G, TraversalClient<ItemOf<G>> C>
typename C::Result descend_plain(const G& g, C& client, NodeId v) {
  auto frame = client.enter(v);
  const EdgeIndex last = g.last_item(v);
  for (EdgeIndex i = g.first_item(v); i < last; ++i) {
    const auto it = g.item(i);
    if (client.scan(frame, it)) client.returned(frame, descend_plain(g, client, G::target_of(it)));
  }
  return client.leave(frame);
}

template <Adjacency G, TraversalClient<ItemOf<G>> C>
typename C::Result descend_edge_stack(const G& g, C& client, NodeId v,
                                      BoundedStack<ItemOf<G>>& edge_stack) {
  auto frame = client.enter(v);
  const std::size_t watermark = push_out_edges_reversed(g, v, edge_stack);
  while (edge_stack.size() > watermark) {
    const auto it = edge_stack.pop();
    if (client.scan(frame, it)) {
      client.returned(frame, descend_edge_stack(g, client, G::target_of(it), edge_stack));
    }
  }
  return client.leave(frame);
}

template <Adjacency G, TraversalClient<ItemOf<G>> C>
typename C::Result descend_iterative(const G& g, C& client, NodeId root,
                                     BoundedStack<ItemOf<G>>& edge_stack,
                                     BoundedStack<TraversalEntry<G, C>>& frames) {
  frames.push({client.enter(root), push_out_edges_reversed(g, root, edge_stack)});
  for (;;) {
    auto& top = frames.top();
    if (edge_stack.size() > top.watermark) {
      const auto it = edge_stack.pop();
      if (client.scan(top.frame, it)) {
        const NodeId w = G::target_of(it);
        auto frame = client.enter(w);
        frames.push_unchecked({frame, push_out_edges_reversed(g, w, edge_stack)});
      }
    } else {
      auto result = client.leave(top.frame);
      frames.pop();
      if (frames.empty()) return result;
      client.returned(frames.top().frame, result);
    }
  }
}

}  // namespace detail

// Full search from root; the caller guarantees root is unvisited.
template <Adjacency G, TraversalClient<ItemOf<G>> C>
typename C::Result traverse(const G& g, C& client, NodeId root, EngineKind engine,
                            TraversalScratch<G, C>& scratch) {
  switch (engine) {
    case EngineKind::recursive:
      return detail::descend_plain(g, client, root);
    case EngineKind::recursive_edge_stack:
      return detail::descend_edge_stack(g, client, root, scratch.edge_stack);
    case EngineKind::iterative:
      break;
  }
  return detail::descend_iterative(g, client, root, scratch.edge_stack, scratch.frames);
}

// Five-hook interface. The hooks own the visited marks; the framework only
// asks is_unvisited(w). Hooks may additionally define descend(u, item), called
// just before a tree edge is followed.
template <class H, class Item>
concept DfsHooks = requires(H& h, NodeId v, Item it) {
  h.init();
  { h.is_unvisited(v) } -> std::convertible_to<bool>;
  h.tree_edge(v);
  h.non_tree_edge(v, it);
  h.finish_tree_edge(v, it);
  h.finish_node(v);
};

template <class Item, DfsHooks<Item> H>
class HookClient {
 public:
  struct Frame {
    NodeId node;
    Item pending;
  };
  using Result = NoResult;

  explicit HookClient(H& hooks) : hooks_(hooks) {}

  Frame enter(NodeId v) {
    hooks_.tree_edge(v);
    return {v, Item{}};
  }

  bool scan(Frame& f, Item it) {
    if (hooks_.is_unvisited(target_of(it))) {
      if constexpr (requires { hooks_.descend(f.node, it); }) hooks_.descend(f.node, it);
      f.pending = it;
      return true;
    }
    hooks_.non_tree_edge(f.node, it);
    return false;
  }

  void returned(Frame& f, NoResult) { hooks_.finish_tree_edge(f.node, f.pending); }

  NoResult leave(Frame& f) {
    hooks_.finish_node(f.node);
    return {};
  }

 private:
  static NodeId target_of(NodeId w) noexcept { return w; }
  static NodeId target_of(Arc a) noexcept { return a.target; }

  H& hooks_;
};

template <Adjacency G, DfsHooks<ItemOf<G>> H>
void dfs_all(const G& g, H& hooks, EngineKind engine = kDefaultEngine) {
  using Client = HookClient<ItemOf<G>, H>;
  Client client(hooks);
  TraversalScratch<G, Client> scratch(g, engine);
  hooks.init();
  const NodeId n = g.node_count();
  for (NodeId v = 0; v < n; ++v) {
    if (hooks.is_unvisited(v)) traverse(g, client, v, engine, scratch);
  }
}

}  // namespace dfsperf
