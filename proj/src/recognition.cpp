#include "hyperline/recognition.hpp"

#include <algorithm>
#include <sstream>

#include "bitrow.hpp"
#include "hyperline/error.hpp"
#include "hyperline/reconstruction.hpp"
#include "parallel.hpp"

namespace hyperline {

namespace {

using detail::Bits;

template <bool Parallel, typename Pred>
std::optional<std::int64_t> first_index(std::int64_t count, Pred&& pred) {
  if constexpr (Parallel) {
    return detail::parallel_first(count, std::forward<Pred>(pred));
  } else {
    return detail::serial_first(count, std::forward<Pred>(pred));
  }
}

std::uint64_t checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("threshold overflow");
  return out;
}

Bits as_bits(const VertexList& set, std::size_t words) {
  Bits b(words, 0);
  for (Vertex v : set) detail::set_bit(b, v);
  return b;
}

VertexList first_bits(std::span<const std::uint64_t> row, std::uint64_t limit) {
  VertexList out;
  detail::for_each_bit(row, [&](std::size_t v) {
    if (out.size() < limit) out.push_back(static_cast<Vertex>(v));
  });
  return out;
}

std::vector<VertexList> big_cliques(const Thresholds& t, const std::vector<VertexList>& cliques) {
  std::vector<VertexList> out;
  for (const auto& c : cliques) {
    if (c.size() >= t.big_clique) out.push_back(c);
  }
  return out;
}

template <bool Parallel>
std::optional<Witness> claw_check(const Graph& g, std::uint64_t k) {
  if (k < 2) throw InputError("k must be >= 2");
  const auto claw = Parallel ? find_claw(g, k + 1) : serial::find_claw(g, k + 1);
  if (!claw) return std::nullopt;
  return ClawWitness{*claw};
}

template <bool Parallel>
std::optional<Witness> common_neighbor_check(const Graph& g, const Thresholds& t) {
  const std::uint64_t need = t.common_neighbor_limit() + 1;
  const auto n = static_cast<Vertex>(g.num_vertices());
  if (need > g.num_vertices()) return std::nullopt;
  auto partner = [&](Vertex a) -> std::optional<Vertex> {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b) && detail::count_and(g.row(a), g.row(b)) >= need) return b;
    }
    return std::nullopt;
  };
  const auto a = first_index<Parallel>(
      n, [&](std::int64_t i) { return partner(static_cast<Vertex>(i)).has_value(); });
  if (!a) return std::nullopt;
  const auto va = static_cast<Vertex>(*a);
  const Vertex vb = *partner(va);
  Bits common(g.row(va).begin(), g.row(va).end());
  const auto rb = g.row(vb);
  for (std::size_t w = 0; w < common.size(); ++w) common[w] &= rb[w];
  return CommonNeighborWitness{va, vb, first_bits(common, need)};
}

template <bool Parallel>
std::optional<Witness> attachment_check(const Graph& g, const Thresholds& t,
                                        const std::vector<VertexList>& cliques) {
  const auto big = big_cliques(t, cliques);
  const std::uint64_t need = t.attachment_limit() + 1;
  const std::size_t words = g.words_per_row();
  auto attached_vertex = [&](const VertexList& clique) -> std::optional<Vertex> {
    const Bits members = as_bits(clique, words);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (detail::test_bit(members, v)) continue;
      if (detail::count_and(g.row(v), members) >= need) return v;
    }
    return std::nullopt;
  };
  const auto idx = first_index<Parallel>(static_cast<std::int64_t>(big.size()), [&](std::int64_t i) {
    return attached_vertex(big[static_cast<std::size_t>(i)]).has_value();
  });
  if (!idx) return std::nullopt;
  const auto& clique = big[static_cast<std::size_t>(*idx)];
  const Vertex v = *attached_vertex(clique);
  Bits hits = as_bits(clique, words);
  const auto rv = g.row(v);
  for (std::size_t w = 0; w < words; ++w) hits[w] &= rv[w];
  return AttachmentWitness{clique, v, first_bits(hits, need)};
}

template <bool Parallel>
std::optional<Witness> overlap_check(const Thresholds& t, const std::vector<VertexList>& cliques) {
  const auto big = big_cliques(t, cliques);
  const std::uint64_t need = t.intersection_limit() + 1;
  auto shared = [&](std::size_t i, std::size_t j) {
    VertexList out;
    std::set_intersection(big[i].begin(), big[i].end(), big[j].begin(), big[j].end(),
                          std::back_inserter(out));
    return out;
  };
  auto partner = [&](std::size_t i) -> std::optional<std::size_t> {
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      if (shared(i, j).size() >= need) return j;
    }
    return std::nullopt;
  };
  const auto idx = first_index<Parallel>(static_cast<std::int64_t>(big.size()), [&](std::int64_t i) {
    return partner(static_cast<std::size_t>(i)).has_value();
  });
  if (!idx) return std::nullopt;
  const auto i = static_cast<std::size_t>(*idx);
  const std::size_t j = *partner(i);
  VertexList common = shared(i, j);
  common.resize(need);
  return OverlapWitness{big[i], big[j], std::move(common)};
}

std::string join(const VertexList& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  return os.str();
}

}  // namespace

Thresholds thresholds(std::uint64_t k, std::uint64_t p) {
  if (k < 2) throw InputError("uniformity k must be >= 2");
  if (p < 1) throw InputError("multiplicity bound p must be >= 1");
  Thresholds t;
  t.k = k;
  t.p = p;
  const std::uint64_t k2 = checked(k, k);
  const std::uint64_t k3 = checked(k2, k);
  // f = p k^3 + (p-3) k + 1 and s = p k^2 + (p-2) k + 2, kept in unsigned
  // arithmetic by moving the negative terms to the other side.
  t.min_edge_degree = checked(p, k3) + checked(p, k) + 1 - 3 * k;
  t.big_clique = checked(p, k2) + checked(p, k) + 2 - 2 * k;
  return t;
}

std::optional<Witness> check_claw(const Graph& g, std::uint64_t k) {
  return claw_check<true>(g, k);
}
std::optional<Witness> check_common_neighbors(const Graph& g, const Thresholds& t) {
  return common_neighbor_check<true>(g, t);
}
std::optional<Witness> check_attachment(const Graph& g, const Thresholds& t) {
  return attachment_check<true>(g, t, maximal_cliques(g));
}
std::optional<Witness> check_attachment(const Graph& g, const Thresholds& t,
                                        const std::vector<VertexList>& cliques) {
  return attachment_check<true>(g, t, cliques);
}
std::optional<Witness> check_overlap(const Graph& g, const Thresholds& t) {
  return overlap_check<true>(t, maximal_cliques(g));
}
std::optional<Witness> check_overlap(const Thresholds& t, const std::vector<VertexList>& cliques) {
  return overlap_check<true>(t, cliques);
}

namespace serial {
std::optional<Witness> check_claw(const Graph& g, std::uint64_t k) {
  return claw_check<false>(g, k);
}
std::optional<Witness> check_common_neighbors(const Graph& g, const Thresholds& t) {
  return common_neighbor_check<false>(g, t);
}
std::optional<Witness> check_attachment(const Graph& g, const Thresholds& t) {
  return attachment_check<false>(g, t, maximal_cliques(g));
}
std::optional<Witness> check_overlap(const Graph& g, const Thresholds& t) {
  return overlap_check<false>(t, maximal_cliques(g));
}
}  // namespace serial

Verdict recognize(const Graph& g, std::uint64_t k, std::uint64_t p) {
  const Thresholds t = thresholds(k, p);
  if (g.num_edges() == 0) throw InputError("recognize needs a graph with at least one edge");

  if (auto w = check_common_neighbors(g, t)) return NonMember{std::move(*w)};
  if (auto w = check_claw(g, k)) return NonMember{std::move(*w)};
  const auto cliques = maximal_cliques(g);
  if (auto w = check_attachment(g, t, cliques)) return NonMember{std::move(*w)};
  if (auto w = check_overlap(t, cliques)) return NonMember{std::move(*w)};

  const std::uint64_t delta = min_edge_degree(g);
  if (delta < t.min_edge_degree) return Inconclusive{delta, t.min_edge_degree};
  return Member{krausz_cover(g, t, cliques)};
}

std::string witness_record(const Witness& w) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ClawWitness>) {
          os << "claw center=" << x.claw.center << " leaves=" << join(x.claw.leaves);
        } else if constexpr (std::is_same_v<T, CommonNeighborWitness>) {
          os << "f1 a=" << x.a << " b=" << x.b << " common=" << join(x.common);
        } else if constexpr (std::is_same_v<T, AttachmentWitness>) {
          os << "f2 clique=" << join(x.clique) << " vertex=" << x.vertex
             << " attached=" << join(x.attached);
        } else {
          os << "f3 clique1=" << join(x.first) << " clique2=" << join(x.second)
             << " shared=" << join(x.shared);
        }
      },
      w);
  return os.str();
}

std::string witness_explanation(const Witness& w, const Thresholds& t) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ClawWitness>) {
          os << "vertex " << x.claw.center << " has " << x.claw.leaves.size()
             << " pairwise non-adjacent neighbors; a line graph of a " << t.k
             << "-uniform hypergraph has no claw with more than " << t.k << " leaves.";
        } else if constexpr (std::is_same_v<T, CommonNeighborWitness>) {
          os << "non-adjacent vertices " << x.a << " and " << x.b << " share at least "
             << x.common.size() << " common neighbors; at most pk^2 = "
             << t.common_neighbor_limit() << " are possible.";
        } else if constexpr (std::is_same_v<T, AttachmentWitness>) {
          os << "vertex " << x.vertex << " lies outside a maximal clique of size "
             << x.clique.size() << " >= " << t.big_clique << " yet is adjacent to at least "
             << x.attached.size() << " of its vertices; at most pk = " << t.attachment_limit()
             << " are possible.";
        } else {
          os << "two distinct maximal cliques of sizes " << x.first.size() << " and "
             << x.second.size() << " (both >= " << t.big_clique << ") share at least "
             << x.shared.size() << " vertices; at most p = " << t.p << " are possible.";
        }
      },
      w);
  return os.str();
}

}  // namespace hyperline
