#pragma once

#include <cstddef>
#include <random>

#include "hyperline/graph.hpp"
#include "hyperline/hypergraph.hpp"

namespace hyperline::generators {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
// Vertices of `second` are shifted by first.num_vertices().
Graph disjoint_union(const Graph& first, const Graph& second);

// `petals` edges of size k through the common core vertex 0, petal vertices
// otherwise private. Each petal is listed `copies` times in a row, so the
// multiplicity is `copies` (for k >= 2).
Hypergraph sunflower(std::size_t petals, std::size_t k, std::size_t copies = 1);

// All edges of the complete bipartite graph K_{a,b} as a 2-uniform
// hypergraph, each repeated `copies` times.
Hypergraph complete_bipartite_hypergraph(std::size_t a, std::size_t b, std::size_t copies = 1);

// Vertex-disjoint union, vertices of `second` shifted past `first`.
Hypergraph disjoint_union(const Hypergraph& first, const Hypergraph& second);

// Up to `edges` random k-subsets of [0, vertices), keeping every pair degree
// at most p. Candidates that would break the bound are redrawn, up to a fixed
// number of attempts, so fewer edges may come back.
Hypergraph random_uniform_hypergraph(std::mt19937_64& rng, std::size_t vertices, std::size_t k,
                                     std::size_t p, std::size_t edges);

}  // namespace hyperline::generators
