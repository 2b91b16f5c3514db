#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = speclust::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("speclust_cli_" + std::to_string(counter_++) + "_" +
                                         std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  std::sort(out.begin(), out.end());
  return out;
}

std::string toy(const TempDir& dir) {
  const std::string path = dir.file("toy.csv");
  REQUIRE(run({"gen", "--dataset", "gaussians", "--seed", "0", "--out", path}).code == 0);
  return path;
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  TempDir dir;
  const std::string points = toy(dir);
  CHECK(run({}).code == 1);
  CHECK(run({"cluster"}).code == 1);
  CHECK(run({"cluster", "--input", points, "--graph", "eps"}).code == 1);
  CHECK(run({"cluster", "--input", points, "--graph", "bogus"}).code == 1);
  CHECK(run({"cluster", "--input", points, "--graph", "eps", "--eps", "1", "--sigma", "1"}).code == 1);
  CHECK(run({"cluster", "--input", points, "--graph", "full", "--knn-k", "3"}).code == 1);
  CHECK(run({"cluster", "--input", points, "--k", "3", "--k-max", "5"}).code == 1);
  CHECK(run({"cluster", "--input", dir.file("missing.csv")}).code == 1);
  CHECK(run({"gen", "--dataset", "cockroach", "--n", "10"}).code == 1);
  CHECK(run({"bench", "--cockroach", "3", "--objective", "cut"}).code == 1);

  const std::string edges = dir.file("g.txt");
  REQUIRE(run({"graph", "--input", points, "--out", edges}).code == 0);
  const Result both = run({"cluster", "--input", points, "--load-graph", edges});
  CHECK(both.code == 1);
  CHECK(both.err.find("mutually exclusive") != std::string::npos);
  CHECK(run({"cluster", "--load-graph", edges, "--sigma", "2"}).code == 1);
}

TEST_CASE("computational errors exit with 2 and JSON on stderr") {
  TempDir dir;
  const std::string edges = dir.file("split.txt");
  write(edges, "# vertices 4\n1 2 1\n3 4 1\n");
  const Result r = run({"commute", "--load-graph", edges});
  CHECK(r.code == 2);
  const Json j = Json::parse(r.err);
  CHECK(keys(j) == std::vector<std::string>{"error", "message"});
  CHECK(j["error"] == "disconnected_graph");

  const Result too_many = run({"cluster", "--load-graph", edges, "--k", "9"});
  CHECK(too_many.code == 2);
  CHECK(Json::parse(too_many.err).contains("error"));
}

TEST_CASE("gen writes points and labels") {
  TempDir dir;
  const Result r = run({"gen", "--dataset", "gaussians", "--n", "20", "--seed", "3", "--labels-out", dir.file("l.csv")});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++count;
  }
  CHECK(count == 20);
  CHECK(run({"gen", "--dataset", "gaussians", "--n", "20", "--seed", "3"}).out == r.out);
  CHECK(!slurp(dir.file("l.csv")).empty());

  const Result roach = run({"gen", "--dataset", "cockroach", "--cockroach-k", "2"});
  REQUIRE(roach.code == 0);
  CHECK(roach.out.rfind("# vertices 8\n", 0) == 0);
}

TEST_CASE("cluster report has a fixed key set and recovers the toy clusters") {
  TempDir dir;
  const std::string points = toy(dir);
  const std::string report = dir.file("r.json");
  const Result r = run({"cluster", "--input", points, "--graph", "knn", "--knn-k", "10", "--sigma", "1", "--k", "4",
                        "--report", report});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(slurp(report));
  CHECK(keys(j) == std::vector<std::string>{"cluster_sizes", "command", "cuts", "eigenvalues", "graph", "k",
                                            "k_source", "laplacian", "n", "runtime_ms", "seed"});
  CHECK(keys(j["graph"]) == std::vector<std::string>{"components", "edges", "eps", "kernel", "knn_k", "mutual",
                                                     "sigma", "type", "vertices"});
  CHECK(j["k"] == 4);
  CHECK(j["k_source"] == "flag");
  CHECK(j["runtime_ms"].is_null());
  CHECK(j["graph"]["eps"].is_null());
  CHECK(j["graph"]["components"] == 4);
  CHECK(j["eigenvalues"].size() == 10);
  CHECK(j["cuts"]["cut"].get<double>() == doctest::Approx(0.0));

  const Result full = run({"cluster", "--input", points, "--graph", "full", "--sigma", "1", "--report", report});
  REQUIRE(full.code == 0);
  const Json fj = Json::parse(slurp(report));
  CHECK(keys(fj["graph"]) == keys(j["graph"]));
  CHECK(fj["k_source"] == "eigengap");
  CHECK(fj["k"] == 4);
  CHECK(fj["graph"]["knn_k"].is_null());

  const Result timed = run({"cluster", "--input", points, "--k", "2", "--timing", "--report", report});
  REQUIRE(timed.code == 0);
  CHECK(Json::parse(slurp(report))["runtime_ms"].is_number());
}

TEST_CASE("cluster output is deterministic") {
  TempDir dir;
  const std::string points = toy(dir);
  const std::vector<std::string> args{"cluster", "--input", points, "--laplacian", "sym", "--k", "4", "--seed", "11"};
  const Result a = run(args);
  const Result b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("index,label\n", 0) == 0);
}

TEST_CASE("diagnose JSON and TSV") {
  TempDir dir;
  const std::string points = toy(dir);
  const std::string table = dir.file("t.tsv");
  const Result r = run({"diagnose", "--input", points, "--graph", "full", "--sigma", "1", "--laplacian",
                        "unnormalized", "--k-max", "8", "--table", table});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"eigengaps", "eigenvalues", "laplacian", "min_degree",
                                            "reliability_ratio", "suggested_k", "unreliable_eigenvalue_indices"});
  CHECK(j["suggested_k"] == 4);
  CHECK(j["eigenvalues"].size() == 9);
  const std::string tsv = slurp(table);
  CHECK(tsv.rfind("index\tlambda\treliable\n", 0) == 0);
  CHECK(tsv.find("\tna\n") == std::string::npos);

  const Result rw = run({"diagnose", "--input", points, "--table", table});
  REQUIRE(rw.code == 0);
  CHECK(slurp(table).find("\tna\n") != std::string::npos);
}

TEST_CASE("bench reports the relaxation gap") {
  const Result r = run({"bench", "--cockroach", "3", "--objective", "ratiocut"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"exact_value", "objective", "ratio", "spectral_value"});
  CHECK(j["objective"] == "ratiocut");
  CHECK(j["exact_value"].get<double>() == doctest::Approx(4.0 / 9.0));
  CHECK(j["ratio"].get<double>() >= 1.0);
}

TEST_CASE("commute distances on a path") {
  TempDir dir;
  const std::string edges = dir.file("path.txt");
  write(edges, "# vertices 3\n1 2 1\n2 3 1\n");
  const Result r = run({"commute", "--load-graph", edges});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("i,j,distance\n", 0) == 0);
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  std::vector<double> values;
  while (std::getline(rows, line)) values.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  REQUIRE(values.size() == 3);
  CHECK(values[0] == doctest::Approx(4.0));
  CHECK(values[1] == doctest::Approx(8.0));
  CHECK(values[2] == doctest::Approx(4.0));
}

TEST_CASE("graph round trip through the edge-list format") {
  TempDir dir;
  const std::string points = toy(dir);
  const std::string edges = dir.file("g.txt");
  REQUIRE(run({"graph", "--input", points, "--graph", "knn", "--knn-k", "10", "--sigma", "1", "--out", edges}).code == 0);
  const Result a = run({"cluster", "--load-graph", edges, "--k", "4"});
  const Result b = run({"cluster", "--input", points, "--knn-k", "10", "--sigma", "1", "--k", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}
