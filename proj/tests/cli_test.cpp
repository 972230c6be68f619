#include "cli.hpp"

#include "dfsperf/graph.hpp"

#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace dfsperf;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"dfsperf"};
  storage.insert(storage.end(), args);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("dfsperf_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen") {
  TempDir dir;
  const auto g = dir.file("g.txt");
  auto r = run({"gen", "--nodes", "4", "--edges", "0", "--seed", "1", "--out", g});
  CHECK(r.code == 0);
  CHECK(slurp(g) == "4 0\n");

  const auto a = dir.file("a.txt");
  const auto b = dir.file("b.txt");
  CHECK(run({"gen", "--nodes", "50", "--edges", "200", "--seed", "9", "--out", a}).code == 0);
  CHECK(run({"gen", "--nodes", "50", "--edges", "200", "--seed", "9", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) == format_edge_list(random_digraph(50, 200, 9)));

  auto bad = run({"gen", "--nodes", "0", "--edges", "5", "--seed", "1", "--out", g});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());

  CHECK(run({"gen", "--nodes", "4", "--seed", "1", "--out", g}).code == 2);
  CHECK(run({"gen", "--nodes", "4", "--edges", "1", "--seed", "1", "--out",
             dir.file("missing/dir/g.txt")})
            .code == 1);
}

TEST_CASE("scc") {
  TempDir dir;
  const auto cycle = dir.file("cycle.txt");
  std::ofstream(cycle) << "3 3\n0 1\n1 2\n2 0\n";
  for (const char* algo : {"ks", "tarjan", "cmg", "tarjan-tuned", "cmg-tuned"}) {
    CAPTURE(algo);
    auto r = run({"scc", "--algo", algo, "--in", cycle});
    CHECK(r.code == 0);
    CHECK(r.out == "sccCount=1\n");
  }

  const auto rnd = dir.file("rnd.txt");
  CHECK(run({"gen", "--nodes", "300", "--edges", "600", "--seed", "4", "--out", rnd}).code == 0);
  std::string first;
  for (const char* algo : {"ks", "tarjan", "cmg", "tarjan-tuned", "cmg-tuned"}) {
    for (const char* engine : {"recursive", "iterative"}) {
      auto r = run({"scc", "--algo", algo, "--in", rnd, "--engine", engine});
      CHECK(r.code == 0);
      if (first.empty()) first = r.out;
      CHECK(r.out == first);
    }
  }

  const auto labels = dir.file("labels.txt");
  CHECK(run({"scc", "--algo", "cmg-tuned", "--in", cycle, "--out", labels}).code == 0);
  CHECK(slurp(labels) == "0\n0\n0\n");

  CHECK(run({"scc", "--algo", "ks", "--in", dir.file("nope.txt")}).code == 1);
  const auto broken = dir.file("broken.txt");
  std::ofstream(broken) << "3 2\n0 1\n";
  auto r = run({"scc", "--algo", "ks", "--in", broken});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"scc", "--algo", "fastest", "--in", cycle}).code == 2);
  CHECK(run({"scc", "--algo", "ks", "--in", cycle, "--engine", "magic"}).code == 2);
}

TEST_CASE("bcc") {
  TempDir dir;
  const auto bowtie = dir.file("bowtie.txt");
  std::ofstream(bowtie) << "5 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n";
  for (const char* algo : {"base", "tuned"}) {
    auto r = run({"bcc", "--algo", algo, "--in", bowtie, "--out", dir.file(algo)});
    CHECK(r.code == 0);
    CHECK(r.out == "bccCount=2\n");
  }
  CHECK(slurp(dir.file("base")) == slurp(dir.file("tuned")));
  CHECK(run({"bcc", "--algo", "base", "--in", dir.file("nope.txt")}).code == 1);
}

TEST_CASE("verify") {
  auto ok = run({"verify", "--trials", "50", "--max-n", "32", "--seed", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "verified 50 scc trials\n");
  CHECK(run({"verify", "--trials", "0", "--max-n", "32", "--seed", "1"}).code == 0);
  CHECK(run({"verify", "--trials", "50", "--max-n", "10", "--seed", "1", "--bcc"}).code == 0);
  CHECK(run({"verify", "--trials", "1", "--max-n", "300", "--seed", "1"}).code == 2);
  CHECK(run({"verify", "--trials", "1", "--max-n", "11", "--seed", "1", "--bcc"}).code == 2);
  CHECK(run({"verify", "--trials", "-1", "--max-n", "8", "--seed", "1"}).code == 2);
  CHECK(run({"verify", "--trials", "1", "--seed", "1"}).code == 2);
}

TEST_CASE("bench") {
  TempDir dir;
  const auto csv = dir.file("runs.csv");
  CHECK(run({"bench", "--suite", "density", "--repeats", "2", "--csv", csv}).code == 2);
  CHECK(run({"bench", "--suite", "speed", "--csv", csv}).code == 2);
  CHECK(run({"bench", "--suite", "density", "--csv", csv, "--m-total", "0"}).code == 2);

  const auto med = dir.file("medians.csv");
  auto r = run({"bench", "--suite", "size", "--m-total", "20480", "--repeats", "3", "--csv", csv,
                "--medians", med});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("algo,n,m,median_ns_per_edge\n", 0) == 0);
  CHECK(slurp(med) == r.out);
  CHECK(slurp(csv).rfind("algo,n,m,run,elapsed_ns,ns_per_edge\n", 0) == 0);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}
