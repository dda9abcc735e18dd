#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperline/hypergraph.hpp"

namespace hyperline {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on 0..n-1. Adjacency is held twice: as sorted
// neighbor lists and as one bit row per vertex for fast set intersection.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Duplicate edges are merged; (u, v) and (v, u) are the same edge.
  // Throws InputError on a self-loop or an endpoint >= n.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return num_edges_; }
  bool adjacent(Vertex u, Vertex v) const;
  const VertexList& neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<VertexList> neighbors_;
};

// Center adjacent to every leaf, leaves pairwise non-adjacent.
struct Claw {
  Vertex center = 0;
  VertexList leaves;

  friend bool operator==(const Claw&, const Claw&) = default;
};

// Vertex i is edge i of h; i ~ j iff the edges share a vertex. Identical
// repeated edges are adjacent.
Graph line_graph(const Hypergraph& h);

// Number of triangles through the edge uv. Throws InputError if u, v are not adjacent.
std::size_t edge_degree(const Graph& g, Vertex u, Vertex v);

// Minimum edge degree; throws InputError on an edgeless graph.
std::size_t min_edge_degree(const Graph& g);

// Vertices outside w adjacent to every vertex of w, ascending.
VertexList common_neighborhood(const Graph& g, const VertexList& w);

// Every inclusion-maximal clique, each sorted, list in lexicographic order.
// Isolated vertices come out as singleton cliques.
std::vector<VertexList> maximal_cliques(const Graph& g);

// A claw with exactly r leaves: smallest center first, then the
// lexicographically least leaf set at that center. Parallel over centers.
std::optional<Claw> find_claw(const Graph& g, std::size_t r);

namespace serial {
// Single-threaded reference for find_claw; returns the identical claw.
std::optional<Claw> find_claw(const Graph& g, std::size_t r);
}  // namespace serial

}  // namespace hyperline
