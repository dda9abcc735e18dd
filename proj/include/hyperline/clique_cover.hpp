#pragma once

#include <cstddef>
#include <vector>

#include "hyperline/hypergraph.hpp"

namespace hyperline {

// Ordered family of vertex sets of a graph on `num_vertices` vertices. Each
// entry is meant to be a clique; singletons and repeated entries are allowed
// and kept as distinct members.
struct CliqueCover {
  std::size_t num_vertices = 0;
  std::vector<VertexList> cliques;

  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

}  // namespace hyperline
