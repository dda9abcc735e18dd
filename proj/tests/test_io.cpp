#include <doctest.h>

#include <random>
#include <sstream>

#include "hyperline/error.hpp"
#include "hyperline/generators.hpp"
#include "hyperline/io.hpp"
#include "hyperline/reconstruction.hpp"

using namespace hyperline;

namespace {

template <class T, class W, class R>
T round_trip(const T& value, W write, R read) {
  std::stringstream ss;
  write(ss, value);
  return read(ss);
}

Hypergraph parse_hg(const std::string& text) {
  std::istringstream is(text);
  return io::read_hypergraph(is);
}

Graph parse_gr(const std::string& text) {
  std::istringstream is(text);
  return io::read_graph(is);
}

BaranyaiPartition parse_bp(const std::string& text) {
  std::istringstream is(text);
  return io::read_partition(is);
}

}  // namespace

TEST_CASE("exact text of small files") {
  std::ostringstream hg;
  io::write_hypergraph(hg, Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(hg.str() == "H 3 3\n0 1\n1 2\n0 2\n");

  std::ostringstream gr;
  io::write_graph(gr, generators::complete_graph(3));
  CHECK(gr.str() == "G 3 3\n0 1\n0 2\n1 2\n");

  std::ostringstream bp;
  io::write_partition(bp, baranyai_partition(3, 2));
  CHECK(bp.str() == "B 3 2 1\nS 1 3\n1 2\n1 3\n2 3\n");
}

TEST_CASE("comments and blank lines are ignored") {
  const Hypergraph h = parse_hg("# header next\n\nH 4 2  # two edges\n0 1 2\n\n# between\n1 2 3\n");
  CHECK(h == Hypergraph(4, {{0, 1, 2}, {1, 2, 3}}));
  CHECK(parse_gr("G 2 1\n0 1 # edge\n") == Graph(2, {{0, 1}}));
  CHECK(parse_hg("H 5 0\n") == Hypergraph(5));
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Hypergraph h =
        generators::random_uniform_hypergraph(rng, 4 + i % 10, 2 + i % 3, 1 + i % 3, i % 15);
    CHECK(round_trip(h, io::write_hypergraph, io::read_hypergraph) == h);
    const Graph g = line_graph(h);
    CHECK(round_trip(g, io::write_graph, io::read_graph) == g);
    const CliqueCover c = hypergraph_to_cover(h);
    CHECK(round_trip(c, io::write_cover, io::read_cover) == c);
  }
  for (std::uint32_t n = 1; n <= 8; ++n) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      const BaranyaiPartition p = baranyai_partition(n, k);
      const BaranyaiPartition back = round_trip(p, io::write_partition, io::read_partition);
      CHECK(back.n == p.n);
      CHECK(back.k == p.k);
      CHECK(back.classes == p.classes);
    }
  }
}

TEST_CASE("malformed input reports the line") {
  CHECK_THROWS_WITH_AS(parse_hg("H 3 2\n0 1\n"), doctest::Contains("unexpected end"), InputError);
  CHECK_THROWS_WITH_AS(parse_hg("H 3 1\n0 5\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_AS(parse_hg("H 3 1\n1 0\n"), InputError);
  CHECK_THROWS_AS(parse_hg("H 3 1\n0 1\n2 1\n"), InputError);
  CHECK_THROWS_AS(parse_hg("G 3 1\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_hg("H -3 1\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_hg("H 3 x\n"), InputError);
  CHECK_THROWS_AS(parse_hg(""), InputError);

  CHECK_THROWS_AS(parse_gr("G 3 1\n0 0\n"), InputError);
  CHECK_THROWS_AS(parse_gr("G 3 1\n0 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_gr("G 3 2\n0 1\n0 1\n"), InputError);
  CHECK_THROWS_WITH_AS(parse_gr("G 3 1\n\n\n0 3\n"), doctest::Contains("line 4"), InputError);

  CHECK_THROWS_AS(parse_bp("B 3 4 1\n"), InputError);
  CHECK_THROWS_AS(parse_bp("B 3 2 1\nS 2 3\n1 2\n1 3\n2 3\n"), InputError);
  CHECK_THROWS_AS(parse_bp("B 3 2 1\nS 1 1\n1 4\n"), InputError);
  CHECK_THROWS_AS(parse_bp("B 3 2 1\nS 1 1\n1 2 3\n"), InputError);

  CHECK_THROWS_AS(io::load_graph("/nonexistent/file.gr"), InputError);
}
