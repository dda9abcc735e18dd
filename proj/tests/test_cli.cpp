#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperline/cli.hpp"
#include "hyperline/generators.hpp"
#include "hyperline/io.hpp"
#include "hyperline/oracle.hpp"

using namespace hyperline;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperline");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Runs the real executable; stderr is discarded.
Result run_binary(const std::string& args) {
  const std::string cmd = std::string(HYPERLINE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hyperline_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text = "") const {
    const auto p = (path / name).string();
    if (!text.empty()) std::ofstream(p) << text;
    return p;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("linegraph on a triangle of pairs writes K3") {
  TempDir dir;
  const auto in = dir.file("tri.hg", "H 3 3\n0 1\n1 2\n0 2\n");
  const auto out = dir.file("tri.gr");
  const Result r = run({"linegraph", "--in", in, "--out", out});
  CHECK(r.code == cli::kOk);
  CHECK(slurp(out) == "G 3 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("recognize verdicts and exit codes") {
  TempDir dir;
  const auto claw = dir.file("claw.gr", "G 4 3\n0 1\n0 2\n0 3\n");
  const Result nm = run_binary("recognize --in " + claw + " -k 2 -p 1");
  CHECK(nm.code == 1);
  CHECK(nm.out.rfind("NONMEMBER claw center=0 leaves=1,2,3\n# ", 0) == 0);

  std::ostringstream k9;
  io::write_graph(k9, generators::complete_graph(9));
  const Result m = run({"recognize", "--in", dir.file("k9.gr", k9.str()), "-k", "2", "-p", "1"});
  CHECK(m.code == cli::kOk);
  CHECK(m.out.rfind("MEMBER cover=", 0) == 0);

  const auto c5 = dir.file("c5.gr", "G 5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  const Result inc = run({"recognize", "--in", c5, "-k", "2", "-p", "1"});
  CHECK(inc.code == cli::kOk);
  CHECK(inc.out.rfind("INCONCLUSIVE min_edge_degree=0 required=5\n", 0) == 0);
  const Result fb = run({"recognize", "--in", c5, "-k", "2", "-p", "1", "--oracle-fallback"});
  CHECK(fb.code == cli::kOk);
  CHECK(fb.out.find("ORACLE MEMBER cover=5\n") != std::string::npos);
}

TEST_CASE("reconstruct emits a hypergraph whose line graph is the input") {
  TempDir dir;
  const Graph g = line_graph(generators::sunflower(9, 2, 2));
  std::ostringstream text;
  io::write_graph(text, g);
  const auto in = dir.file("g.gr", text.str());
  const auto out = dir.file("h.hg");
  const auto cover = dir.file("h.cv");
  const Result r =
      run({"reconstruct", "--in", in, "-k", "2", "-p", "2", "--out", out, "--cover-out", cover});
  REQUIRE(r.code == cli::kOk);
  const Hypergraph h = io::load_hypergraph(out);
  CHECK(line_graph(h) == g);
  CHECK(io::load_cover(cover).cliques.size() >= 1);

  const auto claw = dir.file("claw.gr", "G 4 3\n0 1\n0 2\n0 3\n");
  CHECK(run({"reconstruct", "--in", claw, "-k", "2", "-p", "1"}).code == cli::kNegative);
}

TEST_CASE("baranyai and regular") {
  const Result b = run({"baranyai", "-N", "3", "-k", "2"});
  CHECK(b.code == cli::kOk);
  CHECK(b.out == "B 3 2 1\nS 1 3\n1 2\n1 3\n2 3\n");

  const Result bad = run_binary("regular -N 4 -k 3 -d 2");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("k does not divide d*N") != std::string::npos);

  const Result ok = run({"regular", "-N", "6", "-k", "3", "-d", "5"});
  CHECK(ok.code == cli::kOk);
  std::istringstream is(ok.out);
  const Hypergraph h = io::read_hypergraph(is);
  CHECK(degree_sequence(h) == std::vector<std::size_t>(6, 5));

  CHECK(run({"regular", "-N", "4", "-k", "2", "-d", "6", "--strict-simple"}).code ==
        cli::kNegative);
  CHECK(run({"regular", "-N", "4", "-k", "2", "-d", "6"}).out.find("repeat") !=
        std::string::npos);
  CHECK(run({"baranyai", "-N", "3", "-k", "4"}).code == cli::kBadInput);
  CHECK(run({"baranyai", "-N", "63", "-k", "31"}).code == cli::kFailure);
}

TEST_CASE("oracle subcommands") {
  TempDir dir;
  const auto c4 = dir.file("c4.gr", "G 4 4\n0 1\n0 3\n1 2\n2 3\n");
  const auto k22 = dir.file("k22.gr", "G 4 4\n0 2\n0 3\n1 2\n1 3\n");
  const auto p4 = dir.file("p4.gr", "G 4 3\n0 1\n1 2\n2 3\n");
  CHECK(run({"oracle", "iso", c4, k22}).out == "ISOMORPHIC\n");
  CHECK(run({"oracle", "iso", c4, p4}).code == cli::kNegative);

  const auto claw = dir.file("claw.gr", "G 4 3\n0 1\n0 2\n0 3\n");
  const Result none = run({"oracle", "cover", "--in", claw, "-k", "2", "-p", "1"});
  CHECK(none.code == cli::kNegative);
  CHECK(none.out.rfind("NONMEMBER no-cover", 0) == 0);
  CHECK(run({"oracle", "cover", "--in", claw, "-k", "3", "-p", "1"}).code == cli::kOk);

  std::ostringstream k9;
  io::write_graph(k9, generators::complete_graph(9));
  CHECK(run({"oracle", "cover", "--in", dir.file("k9.gr", k9.str()), "-k", "2", "-p", "1"}).code ==
        cli::kFailure);

  const Result scan = run({"oracle", "scan", "-N", "6", "-k", "4"});
  CHECK(scan.code == cli::kOk);
  CHECK(scan.out.find("discrepancies=0") != std::string::npos);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
  CHECK(run({"recognize", "--in", "x.gr"}).code == cli::kBadInput);
  CHECK(run({"recognize", "--in", "/nonexistent.gr", "-k", "2", "-p", "1"}).code ==
        cli::kBadInput);
  CHECK(run({"--help"}).code == cli::kOk);
  TempDir dir;
  const auto broken = dir.file("broken.gr", "G 3 1\n0 9\n");
  const Result r = run({"recognize", "--in", broken, "-k", "2", "-p", "1"});
  CHECK(r.code == cli::kBadInput);
  CHECK(r.err.find("line 2") != std::string::npos);
  const auto c = dir.file("c.gr", "G 2 1\n0 1\n");
  CHECK(run({"recognize", "--in", c, "-k", "1", "-p", "1"}).code == cli::kBadInput);
}

TEST_CASE("selftest through the binary is deterministic") {
  const Result a = run_binary("selftest");
  const Result b = run_binary("selftest");
  CHECK(a.code == 0);
  CHECK(a.out.find("SELFTEST PASS") != std::string::npos);
  CHECK(a.out == b.out);
}
