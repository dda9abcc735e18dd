#include "hyperline/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bitrow.hpp"
#include "parallel.hpp"
#include "hyperline/error.hpp"

namespace hyperline {

namespace {

using detail::Bits;

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.num_vertices()) + ")");
  }
}

// Lexicographically least independent set of size r among candidates
// (ascending), extending chosen. Plain DFS; candidates are visited in order so
// the first hit is the least one.
bool least_independent_set(const Graph& g, const VertexList& candidates, std::size_t from,
                           std::size_t r, VertexList& chosen) {
  if (chosen.size() == r) return true;
  const std::size_t need = r - chosen.size();
  for (std::size_t i = from; i + need <= candidates.size(); ++i) {
    const Vertex c = candidates[i];
    const bool independent = std::none_of(chosen.begin(), chosen.end(),
                                          [&](Vertex x) { return g.adjacent(x, c); });
    if (!independent) continue;
    chosen.push_back(c);
    if (least_independent_set(g, candidates, i + 1, r, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<Claw> claw_at(const Graph& g, Vertex center, std::size_t r) {
  const auto& nbrs = g.neighbors(center);
  if (nbrs.size() < r) return std::nullopt;
  VertexList leaves;
  leaves.reserve(r);
  if (!least_independent_set(g, nbrs, 0, r, leaves)) return std::nullopt;
  return Claw{center, std::move(leaves)};
}

void require_claw_size(std::size_t r) {
  if (r < 1) throw InputError("claw size r must be >= 1");
}

// Tomita-style pivoting Bron-Kerbosch over bit rows.
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(const Graph& g) : g_(g), words_(g.words_per_row()) {}

  std::vector<VertexList> run() {
    Bits p(words_, 0), x(words_, 0);
    for (std::size_t v = 0; v < g_.num_vertices(); ++v) detail::set_bit(p, v);
    VertexList r;
    expand(r, p, x);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(VertexList& r, Bits& p, Bits& x) {
    if (!detail::any(p)) {
      if (!detail::any(x)) {
        VertexList clique = r;
        std::sort(clique.begin(), clique.end());
        out_.push_back(std::move(clique));
      }
      return;
    }
    // Pivot: vertex of P u X with the most neighbors in P, lowest index on ties.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    auto consider = [&](std::size_t u) {
      const std::size_t c = detail::count_and(g_.row(static_cast<Vertex>(u)), p);
      if (!have_pivot || c > best) {
        pivot = u;
        best = c;
        have_pivot = true;
      }
    };
    detail::for_each_bit(p, consider);
    detail::for_each_bit(x, consider);

    Bits candidates(words_);
    const auto pivot_row = g_.row(static_cast<Vertex>(pivot));
    for (std::size_t w = 0; w < words_; ++w) candidates[w] = p[w] & ~pivot_row[w];

    Bits next_p(words_), next_x(words_);
    detail::for_each_bit(candidates, [&](std::size_t v) {
      const auto row = g_.row(static_cast<Vertex>(v));
      for (std::size_t w = 0; w < words_; ++w) {
        next_p[w] = p[w] & row[w];
        next_x[w] = x[w] & row[w];
      }
      r.push_back(static_cast<Vertex>(v));
      expand(r, next_p, next_x);
      r.pop_back();
      detail::clear_bit(p, v);
      detail::set_bit(x, v);
    });
  }

  const Graph& g_;
  std::size_t words_;
  std::vector<VertexList> out_;
};

}  // namespace

Graph::Graph(std::size_t n)
    : n_(n), words_(detail::words_for(n)), bits_(n * detail::words_for(n), 0), neighbors_(n) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint >= n=" + std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) continue;
    detail::set_bit({bits_.data() + u * words_, words_}, v);
    detail::set_bit({bits_.data() + v * words_, words_}, u);
    ++num_edges_;
  }
  for (std::size_t v = 0; v < n; ++v) {
    detail::for_each_bit(row(static_cast<Vertex>(v)), [&](std::size_t u) {
      neighbors_[v].push_back(static_cast<Vertex>(u));
    });
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  return detail::test_bit(row(u), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph line_graph(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  std::vector<std::vector<Vertex>> incident(h.num_vertices());
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex x : h.edge(i)) incident[x].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) edges.emplace_back(star[a], star[b]);
    }
  }
  return Graph(m, edges);
}

std::size_t edge_degree(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (!g.adjacent(u, v)) {
    throw InputError("edge_degree: " + std::to_string(u) + " and " + std::to_string(v) +
                     " are not adjacent");
  }
  return detail::count_and(g.row(u), g.row(v));
}

std::size_t min_edge_degree(const Graph& g) {
  if (g.num_edges() == 0) throw InputError("minimum edge degree of an edgeless graph is undefined");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [u, v] : g.edges()) best = std::min(best, detail::count_and(g.row(u), g.row(v)));
  return best;
}

VertexList common_neighborhood(const Graph& g, const VertexList& w) {
  if (w.empty()) throw InputError("common_neighborhood needs a nonempty vertex set");
  for (Vertex v : w) require_vertex(g, v);
  Bits acc(g.row(w.front()).begin(), g.row(w.front()).end());
  for (std::size_t i = 1; i < w.size(); ++i) {
    const auto r = g.row(w[i]);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] &= r[j];
  }
  for (Vertex v : w) detail::clear_bit(acc, v);
  VertexList out;
  detail::for_each_bit(acc, [&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

std::vector<VertexList> maximal_cliques(const Graph& g) {
  if (g.num_vertices() == 0) return {};
  return CliqueEnumerator(g).run();
}

std::optional<Claw> find_claw(const Graph& g, std::size_t r) {
  require_claw_size(r);
  const auto center = detail::parallel_first(
      static_cast<std::int64_t>(g.num_vertices()),
      [&](std::int64_t c) { return claw_at(g, static_cast<Vertex>(c), r).has_value(); });
  if (!center) return std::nullopt;
  return claw_at(g, static_cast<Vertex>(*center), r);
}

namespace serial {

std::optional<Claw> find_claw(const Graph& g, std::size_t r) {
  require_claw_size(r);
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    if (auto claw = claw_at(g, c, r)) return claw;
  }
  return std::nullopt;
}

}  // namespace serial

}  // namespace hyperline
