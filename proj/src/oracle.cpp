#include "hyperline/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hyperline/baranyai.hpp"
#include "hyperline/combinatorics.hpp"
#include "hyperline/error.hpp"

namespace hyperline::oracle {

namespace {

using Mask = std::uint32_t;

class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::uint64_t k, std::uint64_t p, std::uint64_t budget)
      : g_(g), k_(k), p_(p), budget_(budget), load_(g.num_vertices(), 0) {
    edges_ = g.edges();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      Mask row = 0;
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) row |= Mask{1} << u;
      adj_.push_back(row);
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      collect_cliques(Mask{1} << v, adj_[v] & ~((Mask{2} << v) - 1));
    }
    // Larger cliques first, then by vertex order.
    std::sort(cliques_.begin(), cliques_.end(), [](Mask a, Mask b) {
      const int ca = std::popcount(a), cb = std::popcount(b);
      if (ca != cb) return ca > cb;
      const Mask diff = a ^ b;
      return (a & diff & (~diff + 1)) != 0;  // holds the least differing vertex
    });
    for (Mask c : cliques_) {
      std::uint64_t covers = 0;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Mask both = (Mask{1} << edges_[e].first) | (Mask{1} << edges_[e].second);
        if ((c & both) == both) covers |= std::uint64_t{1} << e;
      }
      edge_cover_.push_back(covers);
    }
    all_edges_ = edges_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges_.size()) - 1;
  }

  std::optional<CliqueCover> run() {
    if (!dfs(0)) return std::nullopt;
    CliqueCover cover{g_.num_vertices(), {}};
    for (Mask c : chosen_) {
      VertexList members;
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        if (c & (Mask{1} << v)) members.push_back(v);
      }
      cover.cliques.push_back(std::move(members));
    }
    return cover;
  }

 private:
  // All cliques of size >= 2 whose smallest vertex is the lowest bit of `clique`.
  void collect_cliques(Mask clique, Mask candidates) {
    if (std::popcount(clique) >= 2) cliques_.push_back(clique);
    while (candidates != 0) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      collect_cliques(clique | (Mask{1} << v), candidates & adj_[static_cast<std::size_t>(v)]);
    }
  }

  bool fits(Mask c) const {
    for (Mask x = c; x != 0; x &= x - 1) {
      if (load_[static_cast<std::size_t>(std::countr_zero(x))] + 1 > k_) return false;
    }
    return std::all_of(chosen_.begin(), chosen_.end(), [&](Mask other) {
      return static_cast<std::uint64_t>(std::popcount(c & other)) <= p_;
    });
  }

  bool dfs(std::uint64_t covered) {
    if (++visited_ > budget_) throw ResourceError("cover search exhausted its node budget");
    if (covered == all_edges_) return true;
    const int e = std::countr_zero(~covered & all_edges_);
    const std::uint64_t bit = std::uint64_t{1} << e;
    for (std::size_t i = 0; i < cliques_.size(); ++i) {
      if ((edge_cover_[i] & bit) == 0 || !fits(cliques_[i])) continue;
      const Mask c = cliques_[i];
      chosen_.push_back(c);
      for (Mask x = c; x != 0; x &= x - 1) ++load_[static_cast<std::size_t>(std::countr_zero(x))];
      if (dfs(covered | edge_cover_[i])) return true;
      for (Mask x = c; x != 0; x &= x - 1) --load_[static_cast<std::size_t>(std::countr_zero(x))];
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t k_;
  std::uint64_t p_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<Edge> edges_;
  std::vector<Mask> adj_;
  std::vector<Mask> cliques_;
  std::vector<std::uint64_t> edge_cover_;
  std::uint64_t all_edges_ = 0;
  std::vector<std::uint64_t> load_;
  std::vector<Mask> chosen_;
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), map_(a.num_vertices(), 0), used_(b.num_vertices(), false) {}

  bool run() { return extend(0); }

 private:
  bool extend(Vertex v) {
    if (v == a_.num_vertices()) return true;
    for (Vertex w = 0; w < b_.num_vertices(); ++w) {
      if (used_[w] || a_.degree(v) != b_.degree(w)) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) {
        consistent = a_.adjacent(u, v) == b_.adjacent(map_[u], w);
      }
      if (!consistent) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(v + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::string> check_row(const BaranyaiPartition& partition, std::size_t& cases,
                                   std::size_t& realized) {
  std::vector<std::string> out;
  const std::uint32_t n = partition.n, k = partition.k;
  const std::uint64_t d_max = binomial(n - 1, k - 1);
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    ++cases;
    const bool divisible = (d * n) % k == 0;
    std::ostringstream where;
    where << "N=" << n << " k=" << k << " d=" << d << ": ";
    try {
      const RegularHypergraph r = regular_hypergraph(partition, d);
      ++realized;
      if (!divisible) out.push_back(where.str() + "realized although k does not divide dN");
      const auto degrees = degree_sequence(r.hypergraph);
      if (std::any_of(degrees.begin(), degrees.end(), [d](std::size_t x) { return x != d; })) {
        out.push_back(where.str() + "degree sequence is not constant d");
      }
      if (!is_k_uniform(r.hypergraph, k)) out.push_back(where.str() + "not k-uniform");
      if (r.hypergraph.num_edges() != d * n / k) out.push_back(where.str() + "edge count != dN/k");
      auto edges = r.hypergraph.edges();
      std::sort(edges.begin(), edges.end());
      if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        out.push_back(where.str() + "repeated edge although d <= C(N-1,k-1)");
      }
    } catch (const UnrealizableError&) {
      if (divisible) out.push_back(where.str() + "rejected although k divides dN");
    }
  }
  return out;
}

}  // namespace

std::optional<CliqueCover> cover_search(const Graph& g, std::uint64_t k, std::uint64_t p,
                                        std::uint64_t budget, std::size_t size_bound) {
  if (size_bound > kMaxSizeBound) {
    throw ResourceError("oracle size bound is capped at " + std::to_string(kMaxSizeBound));
  }
  if (g.num_vertices() > size_bound) {
    throw ResourceError("graph has " + std::to_string(g.num_vertices()) +
                        " vertices, above the oracle bound " + std::to_string(size_bound));
  }
  if (budget == 0) throw InputError("oracle budget must be positive");
  return CoverSearch(g, k, p, budget).run();
}

bool is_member_bruteforce(const Graph& g, std::uint64_t k, std::uint64_t p, std::uint64_t budget,
                          std::size_t size_bound) {
  return cover_search(g, k, p, budget, size_bound).has_value();
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() > kIsomorphismBound || b.num_vertices() > kIsomorphismBound) {
    throw ResourceError("isomorphism oracle is limited to " + std::to_string(kIsomorphismBound) +
                        " vertices");
  }
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return IsomorphismSearch(a, b).run();
}

RealizabilityReport scan_regular_realizability(std::uint32_t n_max, std::uint32_t k_max) {
  if (n_max > 16) throw InputError("realizability scan is limited to N <= 16");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rows;
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    for (std::uint32_t k = 2; k <= std::min(n, k_max); ++k) rows.emplace_back(n, k);
  }
  std::vector<RealizabilityReport> partial(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows.size()); ++i) {
    auto& slot = partial[static_cast<std::size_t>(i)];
    const auto [n, k] = rows[static_cast<std::size_t>(i)];
    try {
      slot.discrepancies = check_row(baranyai_partition(n, k), slot.cases, slot.realized);
    } catch (const std::exception& e) {
      slot.discrepancies.push_back("N=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   ": construction failed: " + e.what());
    }
  }
  RealizabilityReport report;
  for (auto& r : partial) {
    report.cases += r.cases;
    report.realized += r.realized;
    for (auto& s : r.discrepancies) report.discrepancies.push_back(std::move(s));
  }
  return report;
}

}  // namespace hyperline::oracle
