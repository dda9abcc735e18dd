#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperline {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;

// Finite hypergraph on vertices 0..n-1. Edges are kept strictly sorted and
// their order is significant: edge i becomes vertex i of the line graph.
// Repeated edges are allowed and counted separately everywhere.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n);
  // Sorts each edge. Throws InputError on an empty edge, a repeated vertex
  // inside an edge, or a vertex >= n.
  Hypergraph(std::size_t n, std::vector<VertexList> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<VertexList>& edges() const { return edges_; }
  const VertexList& edge(std::size_t i) const { return edges_.at(i); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexList> edges_;
};

std::size_t degree(const Hypergraph& h, Vertex v);
std::size_t pair_degree(const Hypergraph& h, Vertex u, Vertex v);

// Maximum pair degree over all vertex pairs (0 when no pair is covered).
std::size_t multiplicity(const Hypergraph& h);

bool is_k_uniform(const Hypergraph& h, std::size_t k);
std::vector<std::size_t> degree_sequence(const Hypergraph& h);

}  // namespace hyperline
