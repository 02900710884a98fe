#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bipint/cli.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace bipint;

namespace {

struct TempDir {
  fs::path path;

  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("bipint_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

int run(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  args.insert(args.begin(), "bipint");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0 || line == "#") continue;
    out += line + '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("stats on the 4-cycle") {
  TempDir dir("stats");
  write(dir.file("c4.tsv"), "A\ti\nA\tj\nB\ti\nB\tj\n");
  std::string out;
  CHECK(run({"stats", "--input", dir.file("c4.tsv"), "--null-samples", "0"}, &out) == 0);
  CHECK(out.find("f_EI(⊥) = 1.000000") != std::string::npos);
  CHECK(out.find("# seed: 1") != std::string::npos);
  CHECK(out.find("# filter: on") != std::string::npos);
  CHECK(out.find("# swaps_per_edge: 10") != std::string::npos);

  CHECK(run({"stats", "--input", dir.file("c4.tsv"), "--out", dir.file("r")}) == 0);
  const std::string tsv = read(dir.file("r.report.tsv"));
  CHECK(tsv.find("bottom.f_EI\t1.000000\n") != std::string::npos);
  CHECK(tsv.find("bottom.E_I_ratio\t1\n") != std::string::npos);
  CHECK(fs::exists(dir.file("r.report.txt")));
}

TEST_CASE("stats on an empty file and on a missing file") {
  TempDir dir("empty");
  write(dir.file("empty.tsv"), "");
  std::string out;
  std::string err;
  CHECK(run({"stats", "--input", dir.file("empty.tsv")}, &out, &err) == 0);
  CHECK(out.find("|E|=0") != std::string::npos);
  CHECK(out.find("f_EI(⊥) = 0.000000") != std::string::npos);
  CHECK(err.find("null model skipped") != std::string::npos);

  CHECK(run({"stats", "--input", dir.file("missing.tsv")}, &out, &err) != 0);
  CHECK(err.find("cannot open") != std::string::npos);

  write(dir.file("bad.tsv"), "A\ti\nA\n");
  CHECK(run({"stats", "--input", dir.file("bad.tsv")}, &out, &err) != 0);
  CHECK(err.find("line 2") != std::string::npos);
}

TEST_CASE("argument errors") {
  CHECK(run({}) == 2);
  CHECK(run({"stats"}) == 2);
  CHECK(run({"stats", "--input", "x", "--side", "left"}) == 2);
  CHECK(run({"--help"}) == 0);
  CHECK(run({"stats", "--input", "x", "--pairs", "estimate:zero"}) == 2);
  CHECK(run({"prune", "--input", "x"}) != 0);  // --out required
}

TEST_CASE("project writes the canonical projection") {
  TempDir dir("project");
  write(dir.file("star.tsv"), "A\ti\nA\tj\nA\tk\n");
  std::string out;
  CHECK(run({"project", "--input", dir.file("star.tsv"), "--side", "top"}, &out) == 0);
  CHECK(strip_comments(out) == "i\tj\ni\tk\nj\tk\n");
  CHECK(run({"project", "--input", dir.file("star.tsv"), "--side", "bottom"}, &out) == 0);
  CHECK(strip_comments(out) == "#@node\tbottom\tA\n");
}

TEST_CASE("prune output round-trips to the same projection file") {
  TempDir dir("prune");
  write(dir.file("fig4.tsv"), fixtures::kFigure4);
  std::string out;
  CHECK(run({"prune", "--input", dir.file("fig4.tsv"), "--seed", "5", "--out", dir.file("p")}, &out) == 0);
  CHECK(out.find("compression_ratio\t") != std::string::npos);
  const std::string traj = read(dir.file("p.trajectory.tsv"));
  CHECK(strip_comments(traj).rfind("removals\tremaining_internal\tupper_bound\n", 0) == 0);

  for (const char* side : {"bottom", "top"}) {
    CHECK(run({"prune", "--input", dir.file("fig4.tsv"), "--side", side, "--out", dir.file("q")}) == 0);
    CHECK(run({"project", "--input", dir.file("fig4.tsv"), "--side", side, "--out", dir.file("orig")}) == 0);
    CHECK(run({"project", "--input", dir.file("q.pruned.tsv"), "--side", side, "--out", dir.file("pruned")}) == 0);
    CHECK(read(dir.file("orig.projection.tsv")) == read(dir.file("pruned.projection.tsv")));
  }
}

TEST_CASE("nullmodel and distribution outputs") {
  TempDir dir("null");
  Rng rng(1);
  std::ostringstream g;
  write_graph(fixtures::random_graph(15, 20, 0.2, rng), g);
  write(dir.file("g.tsv"), g.str());

  std::string out;
  CHECK(run({"nullmodel", "--input", dir.file("g.tsv"), "--null-samples", "2", "--out", dir.file("n")}, &out) == 0);
  const auto reloaded = load_graph_file(dir.file("n.null.1.tsv")).graph;
  const auto original = load_graph_file(dir.file("g.tsv")).graph;
  CHECK(degree_sequence(reloaded) == degree_sequence(original));
  CHECK(read(dir.file("n.null.1.tsv")).find("# sample_seed: 2") != std::string::npos);

  CHECK(run({"distribution", "--input", dir.file("g.tsv"), "--null-samples", "2", "--out", dir.file("d")}) == 0);
  for (const char* f : {"d.ccdf.tsv", "d.degree.tsv", "d.ccdf.null.tsv", "d.degree.null.tsv"}) {
    CHECK(fs::exists(dir.file(f)));
  }
  CHECK(strip_comments(read(dir.file("d.ccdf.tsv"))).rfind("x\tp\n0.000000\t1.000000\n", 0) == 0);
  CHECK(read(dir.file("d.ccdf.tsv")).find("# population: bottom, unanalyzed nodes excluded") != std::string::npos);
}

TEST_CASE("seeded commands are byte-identical across runs") {
  TempDir dir("determinism");
  Rng rng(2);
  std::ostringstream g;
  write_graph(fixtures::random_graph(12, 18, 0.25, rng), g);
  write(dir.file("g.tsv"), g.str());
  const std::vector<std::vector<std::string>> commands{
      {"stats", "--pairs", "estimate:50"},
      {"nullmodel", "--null-samples", "2"},
      {"prune", "--policy", "filtered"},
      {"distribution"},
      {"project", "--side", "top"},
  };
  for (const auto& cmd : commands) {
    std::vector<std::string> files;
    for (const char* tag : {"a", "b"}) {
      auto args = cmd;
      args.insert(args.end(), {"--input", dir.file("g.tsv"), "--seed", "9", "--out", dir.file(tag)});
      REQUIRE(run(args) == 0);
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(dir.path)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind("a.", 0) != 0) continue;
      CHECK(read(entry.path().string()) == read(dir.file("b" + name.substr(1))));
      ++compared;
      fs::remove(entry.path());
    }
    CHECK(compared > 0);
  }
}
