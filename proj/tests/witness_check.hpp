#pragma once

// Re-verifies a recognition witness against the graph by direct counting,
// without going through the library's bit-row kernels.

#include <algorithm>
#include <variant>

#include "hyperline/graph.hpp"
#include "hyperline/recognition.hpp"

namespace witness_check {

using namespace hyperline;

inline bool is_clique(const Graph& g, const VertexList& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i] == c[j] || !g.adjacent(c[i], c[j])) return false;
    }
  }
  return true;
}

inline bool is_maximal_clique(const Graph& g, const VertexList& c) {
  if (!is_clique(g, c)) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) continue;
    if (std::all_of(c.begin(), c.end(), [&](Vertex u) { return g.adjacent(u, v); })) return false;
  }
  return true;
}

inline bool distinct_sorted(const VertexList& vs) {
  return std::is_sorted(vs.begin(), vs.end()) &&
         std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

inline bool subset_of(const VertexList& small, const VertexList& big) {
  return std::all_of(small.begin(), small.end(), [&](Vertex v) {
    return std::find(big.begin(), big.end(), v) != big.end();
  });
}

inline bool valid(const Graph& g, const Witness& w, const Thresholds& t) {
  if (const auto* c = std::get_if<ClawWitness>(&w)) {
    const auto& leaves = c->claw.leaves;
    if (leaves.size() != t.k + 1 || !distinct_sorted(leaves)) return false;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (leaves[i] == c->claw.center || !g.adjacent(c->claw.center, leaves[i])) return false;
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        if (g.adjacent(leaves[i], leaves[j])) return false;
      }
    }
    return true;
  }
  if (const auto* f1 = std::get_if<CommonNeighborWitness>(&w)) {
    if (f1->a == f1->b || g.adjacent(f1->a, f1->b)) return false;
    if (f1->common.size() != t.p * t.k * t.k + 1 || !distinct_sorted(f1->common)) return false;
    return std::all_of(f1->common.begin(), f1->common.end(), [&](Vertex v) {
      return v != f1->a && v != f1->b && g.adjacent(v, f1->a) && g.adjacent(v, f1->b);
    });
  }
  if (const auto* f2 = std::get_if<AttachmentWitness>(&w)) {
    if (!is_maximal_clique(g, f2->clique) || f2->clique.size() < t.big_clique) return false;
    if (std::find(f2->clique.begin(), f2->clique.end(), f2->vertex) != f2->clique.end()) return false;
    if (f2->attached.size() != t.p * t.k + 1 || !distinct_sorted(f2->attached)) return false;
    if (!subset_of(f2->attached, f2->clique)) return false;
    return std::all_of(f2->attached.begin(), f2->attached.end(),
                       [&](Vertex v) { return g.adjacent(v, f2->vertex); });
  }
  const auto& f3 = std::get<OverlapWitness>(w);
  if (f3.first == f3.second) return false;
  if (!is_maximal_clique(g, f3.first) || !is_maximal_clique(g, f3.second)) return false;
  if (f3.first.size() < t.big_clique || f3.second.size() < t.big_clique) return false;
  if (f3.shared.size() != t.p + 1 || !distinct_sorted(f3.shared)) return false;
  return subset_of(f3.shared, f3.first) && subset_of(f3.shared, f3.second);
}

}  // namespace witness_check
