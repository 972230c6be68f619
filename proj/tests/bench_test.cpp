#include "dfsperf/bench.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dfsperf::bench;

namespace {

ExperimentSpec tiny(Suite suite) {
  ExperimentSpec spec;
  spec.suite = suite;
  spec.m_total = 10240;
  spec.densities = {10};
  spec.sizes = {1024};
  spec.repeats = 3;
  return spec;
}

std::size_t line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("record count is algorithms x grid points x repeats") {
  auto spec = tiny(Suite::size);
  spec.algorithms = {"cmg_tuned"};
  const auto records = run_suite(spec);
  REQUIRE(records.size() == 3);
  for (int r = 0; r < 3; ++r) {
    CHECK(records[r].algorithm == "cmg_tuned");
    CHECK(records[r].n == 1024);
    CHECK(records[r].m == 10240);
    CHECK(records[r].run == r);
    CHECK(records[r].ns_per_edge > 0.0);
  }
  const auto rows = medians(records);
  REQUIRE(rows.size() == 1);
  CHECK(median_of(rows, "cmg_tuned", 1024, 10240).has_value());
  CHECK_FALSE(median_of(rows, "ks", 1024, 10240).has_value());
}

TEST_CASE("every suite runs with its default algorithms") {
  for (Suite s : {Suite::density, Suite::size, Suite::ablation, Suite::bcc}) {
    CAPTURE(to_string(s));
    const auto spec = tiny(s);
    const auto points = grid(spec).size();
    const auto records = run_suite(spec);
    CHECK(records.size() == points * default_algorithms(s).size() * 3);
  }
  CHECK(grid(tiny(Suite::bcc)).size() == 2);
  CHECK_THROWS_AS(ablation_suite(tiny(Suite::density)), std::invalid_argument);
  CHECK_FALSE(ablation_suite(tiny(Suite::ablation)).empty());
}

TEST_CASE("density grid") {
  ExperimentSpec spec;
  const auto points = grid(spec);
  REQUIRE(points.size() == 5);
  CHECK(points[0].n == (1 << 19));
  CHECK(points[4].n == (1 << 20) / 32);
  for (const auto& p : points) CHECK(p.m == (1 << 20));

  spec.suite = Suite::size;
  const auto sizes = grid(spec);
  CHECK(sizes.front().n == 1024);
  CHECK(sizes.back().n == 65536);
  for (const auto& p : sizes) CHECK(p.m == 10 * p.n);
}

TEST_CASE("validate") {
  auto spec = tiny(Suite::density);
  CHECK_NOTHROW(validate(spec));
  spec.repeats = 2;
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec = tiny(Suite::density);
  spec.algorithms = {"bcc_tuned"};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec.algorithms = {"no_such_algorithm"};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec = tiny(Suite::density);
  spec.densities = {0};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec.densities = {};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec = tiny(Suite::size);
  spec.sizes = {-4};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
}

TEST_CASE("CSV output") {
  CHECK(format_csv({}) == "algo,n,m,run,elapsed_ns,ns_per_edge\n");

  const std::vector<BenchRecord> records = {
      {"cmg_tuned", 1024, 10240, 0, 153600, 15.0},
      {"cmg_tuned", 1024, 10240, 1, 163840, 16.0},
      {"ks", 1024, 10240, 0, 409600, 40.0},
  };
  const auto text = format_csv(records);
  CHECK(line_count(text) == 4);
  CHECK(parse_csv(text) == records);

  const auto path = std::filesystem::temp_directory_path() / "dfsperf_bench_test.csv";
  write_csv(records, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::filesystem::remove(path);
  CHECK(buf.str() == text);

  CHECK_THROWS(write_csv(records, "/nonexistent/dfsperf/out.csv"));
  CHECK_THROWS(parse_csv("algo,n,m\n"));
}

TEST_CASE("CSV round trip keeps odd doubles") {
  const std::vector<BenchRecord> records = {{"x", 1, 3, 2, 1, 1.0 / 3.0}};
  CHECK(parse_csv(format_csv(records)) == records);
}

TEST_CASE("medians") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
  const std::vector<BenchRecord> records = {
      {"a", 1, 10, 0, 0, 5.0},
      {"a", 1, 10, 1, 0, 1.0},
      {"a", 1, 10, 2, 0, 3.0},
      {std::string(kSkippedId), 2, 20, 0, 0, 0.0},
  };
  const auto rows = medians(records);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].median_ns_per_edge == 3.0);
  CHECK(format_medians_csv(rows) == "algo,n,m,median_ns_per_edge\na,1,10,3\n");
}
