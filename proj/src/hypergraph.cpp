#include "hyperline/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "hyperline/error.hpp"

namespace hyperline {

namespace {

void require_vertex(const Hypergraph& h, Vertex v) {
  if (v >= h.num_vertices()) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(h.num_vertices()) + ")");
  }
}

bool contains(const VertexList& edge, Vertex v) {
  return std::binary_search(edge.begin(), edge.end(), v);
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n) : n_(n) {}

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexList> edges)
    : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.empty()) {
      throw InputError("edge " + std::to_string(i) + " is empty");
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InputError("edge " + std::to_string(i) + " repeats a vertex");
    }
    if (e.back() >= n_) {
      throw InputError("edge " + std::to_string(i) + " uses vertex " +
                       std::to_string(e.back()) + " >= n=" + std::to_string(n_));
    }
  }
}

std::size_t degree(const Hypergraph& h, Vertex v) {
  require_vertex(h, v);
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(),
      [v](const VertexList& e) { return contains(e, v); }));
}

std::size_t pair_degree(const Hypergraph& h, Vertex u, Vertex v) {
  require_vertex(h, u);
  require_vertex(h, v);
  if (u == v) throw InputError("pair_degree needs two distinct vertices");
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(),
      [u, v](const VertexList& e) { return contains(e, u) && contains(e, v); }));
}

std::size_t multiplicity(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n < 2) return 0;
  std::unordered_map<std::uint64_t, std::size_t> count;
  std::size_t best = 0;
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        const std::uint64_t key = (std::uint64_t{e[a]} << 32) | e[b];
        best = std::max(best, ++count[key]);
      }
    }
  }
  return best;
}

bool is_k_uniform(const Hypergraph& h, std::size_t k) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [k](const VertexList& e) { return e.size() == k; });
}

std::vector<std::size_t> degree_sequence(const Hypergraph& h) {
  std::vector<std::size_t> out(h.num_vertices(), 0);
  for (const auto& e : h.edges()) {
    for (Vertex v : e) ++out[v];
  }
  return out;
}

}  // namespace hyperline
