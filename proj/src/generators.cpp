#include "hyperline/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hyperline::generators {

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  }
  return Graph(a + b, edges);
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  const auto shift = static_cast<Vertex>(first.num_vertices());
  std::vector<Edge> edges = first.edges();
  for (const auto& [u, v] : second.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(first.num_vertices() + second.num_vertices(), edges);
}

Hypergraph sunflower(std::size_t petals, std::size_t k, std::size_t copies) {
  std::vector<VertexList> edges;
  Vertex next = 1;
  for (std::size_t i = 0; i < petals; ++i) {
    VertexList e{0};
    for (std::size_t j = 1; j < k; ++j) e.push_back(next++);
    for (std::size_t c = 0; c < copies; ++c) edges.push_back(e);
  }
  return Hypergraph(next, std::move(edges));
}

Hypergraph complete_bipartite_hypergraph(std::size_t a, std::size_t b, std::size_t copies) {
  std::vector<VertexList> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) {
      for (std::size_t c = 0; c < copies; ++c) edges.push_back({u, static_cast<Vertex>(a + v)});
    }
  }
  return Hypergraph(a + b, std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& first, const Hypergraph& second) {
  const auto shift = static_cast<Vertex>(first.num_vertices());
  std::vector<VertexList> edges = first.edges();
  for (VertexList e : second.edges()) {
    for (auto& v : e) v += shift;
    edges.push_back(std::move(e));
  }
  return Hypergraph(first.num_vertices() + second.num_vertices(), std::move(edges));
}

Hypergraph random_uniform_hypergraph(std::mt19937_64& rng, std::size_t vertices, std::size_t k,
                                     std::size_t p, std::size_t edges) {
  std::vector<VertexList> out;
  std::map<std::pair<Vertex, Vertex>, std::size_t> pairs;
  std::vector<Vertex> pool(vertices);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  const std::size_t attempts = 50 * edges;
  for (std::size_t a = 0; a < attempts && out.size() < edges && k <= vertices; ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, vertices - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    VertexList e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    bool fits = true;
    for (std::size_t i = 0; i < k && fits; ++i) {
      for (std::size_t j = i + 1; j < k && fits; ++j) fits = pairs[{e[i], e[j]}] < p;
    }
    if (!fits) continue;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) ++pairs[{e[i], e[j]}];
    }
    out.push_back(std::move(e));
  }
  return Hypergraph(vertices, std::move(out));
}

}  // namespace hyperline::generators
