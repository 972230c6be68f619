#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dfsperf::bench {

// density   fixed m = m_total, n = m_total / d for each density d
// size      m/n = 10, one grid point per entry of `sizes`
// ablation  the density grid, timing tuned algorithms with one optimization
//           switched on after the other
// bcc       biconnected components on both the density and the size grid
enum class Suite { density, size, ablation, bcc };

std::string_view to_string(Suite s) noexcept;
std::optional<Suite> parse_suite(std::string_view name) noexcept;

inline constexpr std::int64_t kDeskEdges = std::int64_t{1} << 20;
inline constexpr std::int64_t kSizeSweepDensity = 10;

struct ExperimentSpec {
  Suite suite = Suite::density;
  std::int64_t m_total = kDeskEdges;
  std::vector<std::int64_t> densities = {2, 4, 8, 16, 32};
  // Empty selects powers of two from 2^10 up to m_total / 10.
  std::vector<std::int64_t> sizes;
  std::uint64_t seed = 1;
  int repeats = 5;
  // Empty selects the suite's default set.
  std::vector<std::string> algorithms;
};

// Throws std::invalid_argument describing the first problem.
void validate(const ExperimentSpec& spec);

struct BenchRecord {
  std::string algorithm;
  std::int64_t n = 0;
  std::int64_t m = 0;
  int run = 0;
  std::int64_t elapsed_ns = 0;
  double ns_per_edge = 0.0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

// Algorithm id of the diagnostic row written for a grid point that could not
// be run (allocation failure). Its timing fields are zero.
inline constexpr std::string_view kSkippedId = "skipped";

std::vector<std::string> default_algorithms(Suite s);
std::vector<std::string> known_algorithms();

struct GridPoint {
  std::int64_t n;
  std::int64_t m;
  bool undirected;
};
std::vector<GridPoint> grid(const ExperimentSpec& spec);

// Per grid point: generate and build the graph once, one untimed warmup per
// algorithm, then `repeats` rounds timing each algorithm once per round, in
// list order. Only the algorithm call
// is inside the timed span. Runs on a private thread with enough stack for
// the recursive engines.
std::vector<BenchRecord> run_suite(const ExperimentSpec& spec);

// run_suite restricted to Suite::ablation (throws otherwise).
std::vector<BenchRecord> ablation_suite(const ExperimentSpec& spec);

// CSV: header "algo,n,m,run,elapsed_ns,ns_per_edge", one row per record.
std::string format_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(std::string_view text);
void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path);

struct MedianRow {
  std::string algorithm;
  std::int64_t n = 0;
  std::int64_t m = 0;
  double median_ns_per_edge = 0.0;
};

double median(std::vector<double> values);

// One row per (algorithm, n, m) in first-appearance order; skipped rows are
// dropped.
std::vector<MedianRow> medians(const std::vector<BenchRecord>& records);
std::optional<double> median_of(const std::vector<MedianRow>& rows, std::string_view algorithm,
                                std::int64_t n, std::int64_t m);

// CSV: header "algo,n,m,median_ns_per_edge".
std::string format_medians_csv(const std::vector<MedianRow>& rows);
void write_medians_csv(const std::vector<MedianRow>& rows, const std::filesystem::path& path);

}  // namespace dfsperf::bench
