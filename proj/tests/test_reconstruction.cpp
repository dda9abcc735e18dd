#include <doctest.h>

#include <random>

#include "hyperline/error.hpp"
#include "hyperline/generators.hpp"
#include "hyperline/reconstruction.hpp"

using namespace hyperline;
using namespace hyperline::generators;

namespace {

VertexList range(Vertex from, Vertex to) {
  VertexList out;
  for (Vertex v = from; v < to; ++v) out.push_back(v);
  return out;
}

// Round trip B plus the contract on the reconstructed hypergraph.
void check_reconstruction(const Graph& g, std::uint64_t k, std::uint64_t p) {
  const Reconstruction r = reconstruct_with_cover(g, k, p);
  CHECK(validate_cover(g, r.cover, k, p).valid);
  CHECK(line_graph(r.hypergraph) == g);
  CHECK(is_k_uniform(r.hypergraph, k));
  CHECK(multiplicity(r.hypergraph) <= p);
  CHECK(r.hypergraph.num_edges() == g.num_vertices());
  // Padding: exactly k - g(v) singletons per vertex.
  std::size_t load_total = 0;
  for (const auto& c : r.cover.cliques) load_total += c.size();
  CHECK(r.hypergraph.num_vertices() ==
        r.cover.cliques.size() + k * g.num_vertices() - load_total);
}

}  // namespace

TEST_CASE("krausz_cover") {
  CHECK(krausz_cover(complete_graph(7), thresholds(2, 1)).cliques ==
        std::vector<VertexList>{range(0, 7)});
  const Graph two = disjoint_union(complete_graph(7), complete_graph(7));
  CHECK(krausz_cover(two, thresholds(2, 1)).cliques ==
        std::vector<VertexList>{range(0, 7), range(7, 14)});
  const Graph sun = line_graph(sunflower(24, 3));
  CHECK(sun == complete_graph(24));
  CHECK(krausz_cover(sun, thresholds(3, 1)).cliques == std::vector<VertexList>{range(0, 24)});
  // Claw: no big clique, edges left uncovered.
  CHECK_THROWS_AS(krausz_cover(complete_bipartite_graph(1, 3), thresholds(2, 1)), InternalError);
}

TEST_CASE("validate_cover") {
  const Graph k3 = complete_graph(3);
  CHECK(validate_cover(k3, {3, {{0, 1, 2}}}, 2, 1).valid);

  const CoverReport c4 = validate_cover(cycle_graph(4), {4, {{0, 1}, {1, 2}, {2, 3}}}, 2, 1);
  CHECK_FALSE(c4.valid);
  CHECK(c4.failed == CoverCondition::kEdgeCovered);
  CHECK(c4.diagnostic.find("{0,3}") != std::string::npos);

  const CoverReport twice = validate_cover(k3, {3, {{0, 1, 2}, {0, 1, 2}}}, 2, 1);
  CHECK_FALSE(twice.valid);
  CHECK(twice.failed == CoverCondition::kPairIntersection);

  const CoverReport star =
      validate_cover(complete_bipartite_graph(1, 3), {4, {{0, 1}, {0, 2}, {0, 3}}}, 2, 1);
  CHECK_FALSE(star.valid);
  CHECK(star.failed == CoverCondition::kVertexLoad);

  CHECK_THROWS_AS(validate_cover(cycle_graph(4), {4, {{0, 2}}}, 2, 1), InputError);
  CHECK_THROWS_AS(validate_cover(k3, {3, {{0, 5}}}, 2, 1), InputError);
  CHECK_THROWS_AS(validate_cover(k3, {4, {}}, 2, 1), InputError);
}

TEST_CASE("cover_to_hypergraph") {
  const Hypergraph star = cover_to_hypergraph(complete_graph(3), {3, {{0, 1, 2}}}, 2, 1);
  CHECK(star == Hypergraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(line_graph(star) == complete_graph(3));

  const Hypergraph star7 = cover_to_hypergraph(complete_graph(7), {7, {range(0, 7)}}, 2, 1);
  CHECK(star7.num_vertices() == 8);
  CHECK(star7.num_edges() == 7);
  CHECK(degree(star7, 0) == 7);

  const Hypergraph single = cover_to_hypergraph(Graph(2, {{0, 1}}), {2, {{0, 1}}}, 3, 1);
  CHECK(single == Hypergraph(5, {{0, 1, 2}, {0, 3, 4}}));

  CHECK_THROWS_AS(cover_to_hypergraph(cycle_graph(4), {4, {{0, 1}}}, 2, 1), InputError);
}

TEST_CASE("hypergraph_to_cover") {
  const Hypergraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(hypergraph_to_cover(star).cliques == std::vector<VertexList>{{0, 1, 2}, {0}, {1}, {2}});
  const Hypergraph twins(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(hypergraph_to_cover(twins).cliques == std::vector<VertexList>{{0, 1}, {0, 1}, {0}, {1}});
  CHECK(hypergraph_to_cover(twins).num_vertices == 2);
  CHECK(hypergraph_to_cover(Hypergraph(3)).cliques.empty());
}

TEST_CASE("round trip through the vertex-star cover preserves the line graph") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + rng() % 3;
    const std::uint64_t p = 1 + rng() % 3;
    const Hypergraph h = random_uniform_hypergraph(rng, k + rng() % 10, k, p, rng() % 12);
    const Graph g = line_graph(h);
    const CliqueCover cover = hypergraph_to_cover(h);
    REQUIRE(validate_cover(g, cover, k, p).valid);
    const Hypergraph back = cover_to_hypergraph(g, cover, k, p);
    CHECK(line_graph(back) == g);
    CHECK(is_k_uniform(back, k));
    CHECK(multiplicity(back) <= p);
  }
}

TEST_CASE("reconstruct") {
  const Hypergraph star7 = reconstruct(complete_graph(7), 2, 1);
  CHECK(star7.num_vertices() == 8);
  CHECK(star7.num_edges() == 7);

  const Hypergraph sun = reconstruct(complete_graph(24), 3, 1);
  CHECK(sun.num_vertices() == 49);
  for (std::size_t i = 0; i < 24; ++i) {
    CHECK(sun.edge(i) == VertexList{0, static_cast<Vertex>(1 + 2 * i), static_cast<Vertex>(2 + 2 * i)});
  }

  CHECK_THROWS_AS(reconstruct(complete_bipartite_graph(1, 3), 2, 1), InputError);
  try {
    reconstruct(complete_bipartite_graph(1, 3), 2, 1);
  } catch (const NotAMemberError& e) {
    CHECK(std::holds_alternative<NonMember>(e.verdict()));
  }
  CHECK_THROWS_AS(reconstruct(cycle_graph(5), 2, 1), NotAMemberError);
}

TEST_CASE("reconstruction above the edge-degree threshold") {
  check_reconstruction(complete_graph(7), 2, 1);
  check_reconstruction(line_graph(disjoint_union(sunflower(9, 2), sunflower(7, 2))), 2, 1);
  check_reconstruction(line_graph(sunflower(24, 3)), 3, 1);
  check_reconstruction(line_graph(sunflower(9, 2, 2)), 2, 2);
  // Rook graph L(K_{7,7}): every vertex in two big cliques.
  check_reconstruction(line_graph(complete_bipartite_hypergraph(7, 7)), 2, 1);
  // Doubled K_{9,9}: pair multiplicity 2, stars of 18.
  check_reconstruction(line_graph(complete_bipartite_hypergraph(9, 9, 2)), 2, 2);
}
