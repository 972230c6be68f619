#include "dfsperf/dfs.hpp"
#include "dfsperf/verify.hpp"
#include "recorder.hpp"

#include <doctest.h>

#include <vector>

using namespace dfsperf;
using testing::kAllEngines;
using testing::transcript;

TEST_CASE("hook transcripts of tiny graphs") {
  for (EngineKind e : kAllEngines) {
    CAPTURE(to_string(e));
    CHECK(transcript(build_digraph({1, {}}), e) ==
          std::vector<std::string>{"init", "tree_edge(0)", "finish_node(0)"});
    CHECK(transcript(build_digraph({2, {{0, 1}}}), e) ==
          std::vector<std::string>{"init", "tree_edge(0)", "tree_edge(1)", "finish_node(1)",
                                   "finish_tree_edge(0,1)", "finish_node(0)"});
    CHECK(transcript(build_digraph({0, {}}), e) == std::vector<std::string>{"init"});
  }
}

TEST_CASE("non-tree edges, self-loops and parallel edges are reported in adjacency order") {
  auto g = build_digraph({3, {{0, 1}, {0, 0}, {1, 0}, {0, 1}, {2, 1}}});
  const std::vector<std::string> want = {
      "init",
      "tree_edge(0)",
      "tree_edge(1)",
      "non_tree_edge(1,0)",
      "finish_node(1)",
      "finish_tree_edge(0,1)",
      "non_tree_edge(0,0)",
      "non_tree_edge(0,1)",
      "finish_node(0)",
      "tree_edge(2)",
      "non_tree_edge(2,1)",
      "finish_node(2)",
  };
  for (EngineKind e : kAllEngines) CHECK(transcript(g, e) == want);
}

TEST_CASE("all engines produce identical transcripts") {
  for (std::int64_t trial = 0; trial < 200; ++trial) {
    const auto g = build_digraph(corpus_digraph(42, trial, 32));
    const auto ref = transcript(g, EngineKind::recursive);
    CHECK(transcript(g, EngineKind::recursive_edge_stack) == ref);
    CHECK(transcript(g, EngineKind::iterative) == ref);
  }
}

TEST_CASE("push_out_edges_reversed") {
  auto g = build_digraph({5, {{0, 3}, {0, 1}, {0, 4}, {2, 0}}});
  BoundedStack<NodeId> stack(g.edge_count());

  CHECK(push_out_edges_reversed(g, 0, stack) == 0);
  CHECK(std::vector<NodeId>(stack.contents().begin(), stack.contents().end()) ==
        std::vector<NodeId>{4, 1, 3});

  CHECK(push_out_edges_reversed(g, 1, stack) == 3);  // out-degree 0
  CHECK(stack.size() == 3);

  // Nested region: popping the child's entries stops at the parent's.
  CHECK(stack.pop() == 3);
  CHECK(push_out_edges_reversed(g, 2, stack) == 2);
  CHECK(stack.pop() == 0);
  CHECK(stack.size() == 2);
  CHECK(stack.pop() == 1);
  CHECK(stack.pop() == 4);
  CHECK(stack.empty());

  BoundedStack<NodeId> small(2);
  CHECK_THROWS_AS(push_out_edges_reversed(g, 0, small), std::logic_error);
}

TEST_CASE("BoundedStack") {
  BoundedStack<int> s(2);
  s.push(1);
  s.push(2);
  CHECK(s.free_slots() == 0);
  CHECK_THROWS_AS(s.push(3), std::logic_error);
  CHECK(s.top() == 2);
  CHECK(s.pop() == 2);
  CHECK(s.pop() == 1);
  CHECK(s.empty());

  BoundedStack<int> none(0);
  CHECK_THROWS_AS(none.push(1), std::logic_error);
}

namespace {

struct Counter {
  struct Frame {
    NodeId node;
  };
  using Result = int;  // nodes in the subtree

  std::vector<char> seen;
  std::vector<int> subtree;

  Frame enter(NodeId v) {
    seen[v] = 1;
    subtree[v] = 1;
    return {v};
  }
  bool scan(Frame&, NodeId w) { return !seen[w]; }
  void returned(Frame& f, int r) { subtree[f.node] += r; }
  int leave(Frame& f) { return subtree[f.node]; }
};

}  // namespace

TEST_CASE("traverse passes results from children back to parents and drains the edge stack") {
  auto g = build_digraph({5, {{0, 1}, {1, 2}, {1, 3}, {0, 3}, {3, 0}}});
  for (EngineKind e : kAllEngines) {
    Counter c{std::vector<char>(5, 0), std::vector<int>(5, 0)};
    TraversalScratch<StaticDigraph, Counter> scratch(g, e);
    CHECK(traverse(g, c, 0, e, scratch) == 4);
    CHECK(c.subtree == std::vector<int>{4, 3, 1, 1, 0});
    CHECK(scratch.edge_stack.empty());
    CHECK(traverse(g, c, 4, e, scratch) == 1);
  }
}

TEST_CASE("engine names") {
  for (EngineKind e : kAllEngines) CHECK(parse_engine(to_string(e)) == e);
  CHECK_FALSE(parse_engine("fast").has_value());
}
