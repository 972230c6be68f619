#include "dfsperf/bench.hpp"

#include "dfsperf/bcc.hpp"
#include "dfsperf/graph.hpp"
#include "dfsperf/large_stack.hpp"
#include "dfsperf/scc.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <new>
#include <stdexcept>

namespace dfsperf::bench {

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::density:
      return "density";
    case Suite::size:
      return "size";
    case Suite::ablation:
      return "ablation";
    case Suite::bcc:
      return "bcc";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (Suite s : {Suite::density, Suite::size, Suite::ablation, Suite::bcc}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

namespace {

struct Workload {
  const StaticDigraph* digraph = nullptr;
  const StaticDigraph* reversed = nullptr;
  const StaticUndirectedGraph* undirected = nullptr;
};

using Kernel = std::function<std::int64_t(const Workload&)>;

struct Algorithm {
  std::string_view id;
  bool undirected;
  bool needs_reverse;
  Kernel run;
};

constexpr EngineKind kRec = EngineKind::recursive;
constexpr EngineKind kRecEs = EngineKind::recursive_edge_stack;
constexpr EngineKind kIter = EngineKind::iterative;

Kernel scc(SccLabeling (*fn)(const StaticDigraph&, EngineKind), EngineKind engine) {
  return [fn, engine](const Workload& w) { return std::int64_t{fn(*w.digraph, engine).scc_count}; };
}

Kernel bcc(BccLabeling (*fn)(const StaticUndirectedGraph&, EngineKind), EngineKind engine) {
  return [fn, engine](const Workload& w) {
    return std::int64_t{fn(*w.undirected, engine).bcc_count};
  };
}

const std::vector<Algorithm>& registry() {
  static const std::vector<Algorithm> algorithms = {
      {"ks", false, true,
       [](const Workload& w) {
         return std::int64_t{scc_kosaraju_sharir(*w.digraph, *w.reversed, kIter).scc_count};
       }},
      {"ks_with_reverse", false, false,
       [](const Workload& w) {
         return std::int64_t{scc_kosaraju_sharir(*w.digraph, kIter).scc_count};
       }},
      {"tarjan_baseline", false, false, scc(scc_tarjan_baseline, kRec)},
      {"cmg_baseline", false, false, scc(scc_cmg_baseline, kRec)},
      {"tarjan_tuned", false, false, scc(scc_tarjan_tuned, kIter)},
      {"cmg_tuned", false, false, scc(scc_cmg_tuned, kIter)},
      {"dfs_scan", false, false, [](const Workload& w) { return dfs_scan(*w.digraph, kIter); }},
      // Ablation ladder: baseline, +overlay, +edge stack, +non-recursive.
      {"cmg_overlay", false, false, scc(scc_cmg_tuned, kRec)},
      {"cmg_overlay_edgestack", false, false, scc(scc_cmg_tuned, kRecEs)},
      {"cmg_overlay_edgestack_iterative", false, false, scc(scc_cmg_tuned, kIter)},
      {"tarjan_overlay", false, false, scc(scc_tarjan_tuned, kRec)},
      {"tarjan_overlay_edgestack", false, false, scc(scc_tarjan_tuned, kRecEs)},
      {"tarjan_overlay_edgestack_iterative", false, false, scc(scc_tarjan_tuned, kIter)},
      {"bcc_baseline", true, false, bcc(bcc_baseline, kRec)},
      {"bcc_overlay", true, false, bcc(bcc_tuned, kRec)},
      {"bcc_overlay_edgestack", true, false, bcc(bcc_tuned, kRecEs)},
      {"bcc_tuned", true, false, bcc(bcc_tuned, kIter)},
  };
  return algorithms;
}

const Algorithm& lookup(std::string_view id) {
  for (const Algorithm& a : registry()) {
    if (a.id == id) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(id) + "'");
}

std::vector<std::int64_t> default_sizes(std::int64_t m_total) {
  std::vector<std::int64_t> sizes;
  for (std::int64_t n = 1 << 10; n * kSizeSweepDensity <= m_total; n *= 2) sizes.push_back(n);
  return sizes;
}

std::vector<std::string> selected_algorithms(const ExperimentSpec& spec) {
  return spec.algorithms.empty() ? default_algorithms(spec.suite) : spec.algorithms;
}

volatile std::int64_t g_sink = 0;

std::int64_t time_once(const Algorithm& algo, const Workload& w) {
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t result = algo.run(w);
  const auto stop = std::chrono::steady_clock::now();
  g_sink = result;
  return std::max<std::int64_t>(
      1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

void run_point(const GridPoint& point, std::uint64_t seed, int repeats,
               const std::vector<const Algorithm*>& algos, std::vector<BenchRecord>& out) {
  const auto n = static_cast<NodeId>(point.n);
  const auto m = static_cast<std::size_t>(point.m);
  // Same seed for every grid point of a suite: inputs depend only on (n, m, seed).
  const EdgeList el = point.undirected ? random_undirected(n, m, seed) : random_digraph(n, m, seed);

  StaticDigraph digraph;
  StaticDigraph reversed;
  StaticUndirectedGraph undirected;
  Workload w;
  if (point.undirected) {
    undirected = build_undirected(el);
    w.undirected = &undirected;
  } else {
    digraph = build_digraph(el);
    w.digraph = &digraph;
    const bool need_rev =
        std::any_of(algos.begin(), algos.end(), [](const Algorithm* a) { return a->needs_reverse; });
    if (need_rev) {
      reversed = reverse(digraph);
      w.reversed = &reversed;
    }
  }

  for (const Algorithm* algo : algos) g_sink = algo->run(w);
  // Round-robin so that slow drift (frequency, noisy neighbours) is spread
  // over all algorithms instead of biasing whichever ran during it.
  for (int r = 0; r < repeats; ++r) {
    for (const Algorithm* algo : algos) {
      const std::int64_t ns = time_once(*algo, w);
      out.push_back({std::string(algo->id), point.n, point.m, r, ns,
                     point.m > 0 ? static_cast<double>(ns) / static_cast<double>(point.m) : 0.0});
    }
  }
}

}  // namespace

std::vector<std::string> default_algorithms(Suite s) {
  switch (s) {
    case Suite::density:
    case Suite::size:
      return {"ks",         "ks_with_reverse", "tarjan_baseline", "cmg_baseline",
              "tarjan_tuned", "cmg_tuned",     "dfs_scan"};
    case Suite::ablation:
      return {"cmg_baseline",    "cmg_overlay",
              "cmg_overlay_edgestack",    "cmg_overlay_edgestack_iterative",
              "tarjan_baseline", "tarjan_overlay",
              "tarjan_overlay_edgestack", "tarjan_overlay_edgestack_iterative"};
    case Suite::bcc:
      return {"bcc_baseline", "bcc_overlay", "bcc_overlay_edgestack", "bcc_tuned"};
  }
  return {};
}

std::vector<std::string> known_algorithms() {
  std::vector<std::string> ids;
  for (const Algorithm& a : registry()) ids.emplace_back(a.id);
  return ids;
}

void validate(const ExperimentSpec& spec) {
  if (spec.repeats < 3) {
    throw std::invalid_argument("repeats must be at least 3 so that a median exists");
  }
  if (spec.m_total < 1 || spec.m_total > kMaxEdges) {
    throw std::invalid_argument("m_total must be in [1, 2^31 - 1]");
  }
  const bool uses_densities = spec.suite != Suite::size;
  if (uses_densities) {
    if (spec.densities.empty()) throw std::invalid_argument("no densities given");
    for (std::int64_t d : spec.densities) {
      if (d < 1 || spec.m_total / d < 1) {
        throw std::invalid_argument("density " + std::to_string(d) + " leaves no nodes");
      }
      if (spec.m_total / d > kMaxNodes) {
        throw std::invalid_argument("density " + std::to_string(d) + " yields too many nodes");
      }
    }
  }
  for (std::int64_t n : spec.sizes) {
    if (n < 1 || n > kMaxNodes || n * kSizeSweepDensity > kMaxEdges) {
      throw std::invalid_argument("size " + std::to_string(n) + " out of range");
    }
  }
  const bool want_undirected = spec.suite == Suite::bcc;
  for (const std::string& id : selected_algorithms(spec)) {
    if (lookup(id).undirected != want_undirected) {
      throw std::invalid_argument("algorithm '" + id + "' does not belong to suite " +
                                  std::string(to_string(spec.suite)));
    }
  }
  if (grid(spec).empty()) throw std::invalid_argument("experiment grid is empty");
}

std::vector<GridPoint> grid(const ExperimentSpec& spec) {
  std::vector<GridPoint> points;
  const bool undirected = spec.suite == Suite::bcc;
  if (spec.suite != Suite::size) {
    for (std::int64_t d : spec.densities) points.push_back({spec.m_total / d, spec.m_total, undirected});
  }
  if (spec.suite == Suite::size || spec.suite == Suite::bcc) {
    const auto sizes = spec.sizes.empty() ? default_sizes(spec.m_total) : spec.sizes;
    for (std::int64_t n : sizes) points.push_back({n, n * kSizeSweepDensity, undirected});
  }
  return points;
}

std::vector<BenchRecord> run_suite(const ExperimentSpec& spec) {
  validate(spec);
  std::vector<const Algorithm*> algos;
  for (const std::string& id : selected_algorithms(spec)) algos.push_back(&lookup(id));
  const auto points = grid(spec);

  std::int64_t deepest = 0;
  for (const GridPoint& p : points) deepest = std::max(deepest, p.n);

  std::vector<BenchRecord> records;
  run_with_stack(recursive_stack_bytes(deepest), [&] {
    for (const GridPoint& p : points) {
      const std::size_t before = records.size();
      try {
        run_point(p, spec.seed, spec.repeats, algos, records);
      } catch (const std::bad_alloc&) {
        records.resize(before);
        records.push_back({std::string(kSkippedId), p.n, p.m, 0, 0, 0.0});
      }
    }
  });
  return records;
}

std::vector<BenchRecord> ablation_suite(const ExperimentSpec& spec) {
  if (spec.suite != Suite::ablation) throw std::invalid_argument("not an ablation spec");
  return run_suite(spec);
}

namespace {

template <class T>
void append_number(std::string& out, T value) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, value);
  out.append(buf, r.ptr);
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw std::runtime_error("write error on " + path.string());
}

template <class T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  const auto r = std::from_chars(field.data(), field.data() + field.size(), value);
  if (r.ec != std::errc{} || r.ptr != field.data() + field.size()) {
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad field '" +
                             std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string format_csv(const std::vector<BenchRecord>& records) {
  std::string out = "algo,n,m,run,elapsed_ns,ns_per_edge\n";
  for (const BenchRecord& r : records) {
    out += r.algorithm;
    out += ',';
    append_number(out, r.n);
    out += ',';
    append_number(out, r.m);
    out += ',';
    append_number(out, r.run);
    out += ',';
    append_number(out, r.elapsed_ns);
    out += ',';
    append_number(out, r.ns_per_edge);
    out += '\n';
  }
  return out;
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != "algo,n,m,run,elapsed_ns,ns_per_edge") {
        throw std::runtime_error("csv line 1: unexpected header");
      }
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 6) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 6 fields");
    }
    records.push_back({std::string(fields[0]), parse_field<std::int64_t>(fields[1], line_no),
                       parse_field<std::int64_t>(fields[2], line_no),
                       parse_field<int>(fields[3], line_no),
                       parse_field<std::int64_t>(fields[4], line_no),
                       parse_field<double>(fields[5], line_no)});
  }
  return records;
}

void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path) {
  write_text(format_csv(records), path);
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

std::vector<MedianRow> medians(const std::vector<BenchRecord>& records) {
  struct Group {
    MedianRow row;
    std::vector<double> samples;
  };
  std::vector<Group> groups;
  for (const BenchRecord& r : records) {
    if (r.algorithm == kSkippedId) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.row.algorithm == r.algorithm && g.row.n == r.n && g.row.m == r.m;
    });
    if (it == groups.end()) {
      groups.push_back({{r.algorithm, r.n, r.m, 0.0}, {}});
      it = groups.end() - 1;
    }
    it->samples.push_back(r.ns_per_edge);
  }
  std::vector<MedianRow> rows;
  rows.reserve(groups.size());
  for (Group& g : groups) {
    g.row.median_ns_per_edge = median(std::move(g.samples));
    rows.push_back(std::move(g.row));
  }
  return rows;
}

std::optional<double> median_of(const std::vector<MedianRow>& rows, std::string_view algorithm,
                                std::int64_t n, std::int64_t m) {
  for (const MedianRow& r : rows) {
    if (r.algorithm == algorithm && r.m == m && r.n == n) return r.median_ns_per_edge;
  }
  return std::nullopt;
}

std::string format_medians_csv(const std::vector<MedianRow>& rows) {
  std::string out = "algo,n,m,median_ns_per_edge\n";
  for (const MedianRow& r : rows) {
    out += r.algorithm;
    out += ',';
    append_number(out, r.n);
    out += ',';
    append_number(out, r.m);
    out += ',';
    append_number(out, r.median_ns_per_edge);
    out += '\n';
  }
  return out;
}

void write_medians_csv(const std::vector<MedianRow>& rows, const std::filesystem::path& path) {
  write_text(format_medians_csv(rows), path);
}

}  // namespace dfsperf::bench
