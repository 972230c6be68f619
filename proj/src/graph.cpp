#include "dfsperf/graph.hpp"

#include "dfsperf/rng.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

namespace dfsperf {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

StaticDigraph::StaticDigraph(std::vector<EdgeIndex> offsets, std::vector<NodeId> targets)
    : offset_(std::move(offsets)), target_(std::move(targets)) {
  if (offset_.empty() || offset_.front() != 0 || offset_.back() != target_.size()) {
    throw GraphError("offset array does not match target array");
  }
}

StaticUndirectedGraph::StaticUndirectedGraph(std::vector<EdgeIndex> offsets,
                                             std::vector<NodeId> arc_targets,
                                             std::vector<EdgeId> arc_edge_ids)
    : offset_(std::move(offsets)),
      arc_target_(std::move(arc_targets)),
      arc_edge_(std::move(arc_edge_ids)) {
  if (offset_.empty() || offset_.front() != 0 || offset_.back() != arc_target_.size() ||
      arc_target_.size() != arc_edge_.size() || arc_target_.size() % 2 != 0) {
    throw GraphError("offset array does not match arc arrays");
  }
}

namespace {

void check_sizes(std::int64_t n, std::size_t m) {
  if (n < 0 || n > kMaxNodes) {
    throw GraphError("node count " + std::to_string(n) + " out of range");
  }
  if (m > static_cast<std::size_t>(kMaxEdges)) {
    throw GraphError("edge count " + std::to_string(m) + " out of range");
  }
}

void check_endpoints(const EdgeList& el) {
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    const Edge& e = el.edges[i];
    if (e.source < 0 || e.source >= el.n || e.target < 0 || e.target >= el.n) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(e.source) + ", " +
                       std::to_string(e.target) + ") has an endpoint outside [0, " +
                       std::to_string(el.n) + ")");
    }
  }
}

// Bucket start positions from per-node counts; leaves counts[v] = start of v.
std::vector<EdgeIndex> prefix_offsets(std::vector<EdgeIndex>& counts) {
  std::vector<EdgeIndex> offsets(counts.size() + 1);
  EdgeIndex sum = 0;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    offsets[v] = sum;
    sum += counts[v];
    counts[v] = offsets[v];
  }
  offsets[counts.size()] = sum;
  return offsets;
}

}  // namespace

StaticDigraph build_digraph(const EdgeList& el) {
  check_sizes(el.n, el.m());
  check_endpoints(el);

  std::vector<EdgeIndex> next(el.n, 0);
  for (const Edge& e : el.edges) ++next[e.source];
  auto offsets = prefix_offsets(next);

  std::vector<NodeId> targets(el.m());
  for (const Edge& e : el.edges) targets[next[e.source]++] = e.target;
  return StaticDigraph(std::move(offsets), std::move(targets));
}

StaticDigraph reverse(const StaticDigraph& g) {
  const NodeId n = g.node_count();
  std::vector<EdgeIndex> next(n, 0);
  for (NodeId w : g.targets()) ++next[w];
  auto offsets = prefix_offsets(next);

  std::vector<NodeId> targets(g.edge_count());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w : g.out(u)) targets[next[w]++] = u;
  }
  return StaticDigraph(std::move(offsets), std::move(targets));
}

StaticUndirectedGraph build_undirected(const EdgeList& el) {
  check_sizes(el.n, el.m());
  check_endpoints(el);

  std::vector<EdgeIndex> next(el.n, 0);
  for (const Edge& e : el.edges) {
    ++next[e.source];
    ++next[e.target];
  }
  auto offsets = prefix_offsets(next);

  std::vector<NodeId> arc_target(2 * el.m());
  std::vector<EdgeId> arc_edge(2 * el.m());
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    const Edge& e = el.edges[i];
    const auto id = static_cast<EdgeId>(i);
    EdgeIndex a = next[e.source]++;
    arc_target[a] = e.target;
    arc_edge[a] = id;
    EdgeIndex b = next[e.target]++;
    arc_target[b] = e.source;
    arc_edge[b] = id;
  }
  return StaticUndirectedGraph(std::move(offsets), std::move(arc_target), std::move(arc_edge));
}

EdgeList random_digraph(NodeId n, std::size_t m, std::uint64_t seed) {
  check_sizes(n, m);
  if (n == 0 && m > 0) throw GraphError("cannot place edges in a graph with no nodes");

  EdgeList el;
  el.n = n;
  el.edges.resize(m);
  SplitMix64 rng(seed);
  const auto bound = static_cast<std::uint64_t>(n);
  for (Edge& e : el.edges) {
    e.source = static_cast<NodeId>(rng.below(bound));
    e.target = static_cast<NodeId>(rng.below(bound));
  }
  return el;
}

EdgeList random_undirected(NodeId n, std::size_t m, std::uint64_t seed) {
  // Same endpoint model; only the interpretation of the pairs differs.
  return random_digraph(n, m, seed);
}

namespace {

class LineParser {
 public:
  explicit LineParser(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t line_number() const { return line_; }

  // Next LF-terminated line; the final line may lack the LF.
  std::string_view next_line() {
    ++line_;
    const std::size_t end = text_.find('\n', pos_);
    std::string_view line;
    if (end == std::string_view::npos) {
      line = text_.substr(pos_);
      pos_ = text_.size();
    } else {
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
    }
    return line;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

// Exactly two non-negative decimal integers separated by one space.
template <class A, class B>
void parse_pair(std::string_view line, std::size_t line_no, A& a, B& b) {
  const char* first = line.data();
  const char* last = line.data() + line.size();
  auto bad = [&](const std::string& why) { throw ParseError(line_no, why); };
  if (line.empty()) bad("empty line");
  if (*first == '-' || *first == '+') bad("expected a non-negative integer");
  auto r1 = std::from_chars(first, last, a);
  if (r1.ec != std::errc{}) bad("expected a non-negative integer");
  if (r1.ptr == last || *r1.ptr != ' ') bad("expected two space-separated integers");
  const char* second = r1.ptr + 1;
  if (second == last || *second == '-' || *second == '+') bad("expected a non-negative integer");
  auto r2 = std::from_chars(second, last, b);
  if (r2.ec != std::errc{}) bad("expected a non-negative integer");
  if (r2.ptr != last) bad("trailing characters");
}

}  // namespace

EdgeList parse_edge_list(std::string_view text) {
  LineParser lines(text);
  if (lines.at_end()) throw ParseError(1, "missing header line");

  std::int64_t n = 0;
  std::int64_t m = 0;
  parse_pair(lines.next_line(), 1, n, m);
  if (n > kMaxNodes) throw ParseError(1, "node count too large");
  if (m > kMaxEdges) throw ParseError(1, "edge count too large");
  if (n == 0 && m > 0) throw ParseError(1, "edges declared for an empty graph");

  EdgeList el;
  el.n = static_cast<NodeId>(n);
  el.edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (lines.at_end()) {
      throw ParseError(lines.line_number() + 1, "truncated file: expected " + std::to_string(m) +
                                                    " edges, found " + std::to_string(i));
    }
    std::int64_t u = 0;
    std::int64_t v = 0;
    const std::string_view line = lines.next_line();
    parse_pair(line, lines.line_number(), u, v);
    if (u >= n || v >= n) {
      throw ParseError(lines.line_number(),
                       "endpoint out of range [0, " + std::to_string(n) + ")");
    }
    el.edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (!lines.at_end()) {
    throw ParseError(lines.line_number() + 1, "unexpected data after the last edge");
  }
  return el;
}

EdgeList read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read error on " + path.string());
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const EdgeList& el) {
  std::string out;
  out.reserve(24 * (el.m() + 1));
  auto number = [&](std::int64_t x) {
    char buf[24];
    out.append(buf, std::to_chars(buf, buf + sizeof buf, x).ptr);
  };
  auto put = [&](std::int64_t a, std::int64_t b) {
    number(a);
    out.push_back(' ');
    number(b);
    out.push_back('\n');
  };
  put(el.n, static_cast<std::int64_t>(el.m()));
  for (const Edge& e : el.edges) put(e.source, e.target);
  return out;
}

void write_edge_list(const EdgeList& el, const std::filesystem::path& path) {
  const std::string text = format_edge_list(el);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw std::runtime_error("write error on " + path.string());
}

}  // namespace dfsperf
