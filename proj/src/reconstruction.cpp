#include "hyperline/reconstruction.hpp"

#include <algorithm>
#include <sstream>

#include "bitrow.hpp"

namespace hyperline {

namespace {

std::string set_text(const VertexList& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << '}';
  return os.str();
}

void require_cliques(const Graph& g, const CliqueCover& cover) {
  if (cover.num_vertices != g.num_vertices()) {
    throw InputError("cover is over " + std::to_string(cover.num_vertices) +
                     " vertices but the graph has " + std::to_string(g.num_vertices()));
  }
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    const auto& c = cover.cliques[i];
    if (c.empty()) throw InputError("cover entry " + std::to_string(i) + " is empty");
    if (!std::is_sorted(c.begin(), c.end()) ||
        std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw InputError("cover entry " + std::to_string(i) + " is not strictly sorted");
    }
    if (c.back() >= g.num_vertices()) {
      throw InputError("cover entry " + std::to_string(i) + " has vertex out of range");
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (!g.adjacent(c[a], c[b])) {
          throw InputError("cover entry " + std::to_string(i) + " " + set_text(c) +
                           " is not a clique: " + std::to_string(c[a]) + " and " +
                           std::to_string(c[b]) + " are not adjacent");
        }
      }
    }
  }
}

}  // namespace

CliqueCover krausz_cover(const Graph& g, const Thresholds& t) {
  return krausz_cover(g, t, maximal_cliques(g));
}

CliqueCover krausz_cover(const Graph& g, const Thresholds& t,
                         const std::vector<VertexList>& maximal) {
  CliqueCover cover{g.num_vertices(), {}};
  for (const auto& c : maximal) {
    if (c.size() >= t.big_clique) cover.cliques.push_back(c);
  }
  std::sort(cover.cliques.begin(), cover.cliques.end());
  const CoverReport report = validate_cover(g, cover, t.k, t.p);
  if (!report.valid) {
    throw InternalError("big-clique family is not a valid cover (" + report.diagnostic +
                        "); the graph does not satisfy the recognition preconditions");
  }
  return cover;
}

CoverReport validate_cover(const Graph& g, const CliqueCover& cover, std::uint64_t k,
                           std::uint64_t p) {
  require_cliques(g, cover);
  const std::size_t n = g.num_vertices();
  const std::size_t words = detail::words_for(n);

  // (i): mark every pair inside some entry.
  std::vector<std::uint64_t> covered(n * words, 0);
  for (const auto& c : cover.cliques) {
    for (Vertex u : c) {
      for (Vertex v : c) {
        if (u != v) detail::set_bit({covered.data() + u * words, words}, v);
      }
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (!detail::test_bit({covered.data() + u * words, words}, v)) {
      return {false, CoverCondition::kEdgeCovered,
              "condition (i): edge {" + std::to_string(u) + "," + std::to_string(v) +
                  "} is not inside any clique"};
    }
  }

  // (ii)
  std::vector<std::uint64_t> load(n, 0);
  for (const auto& c : cover.cliques) {
    for (Vertex v : c) ++load[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (load[v] > k) {
      return {false, CoverCondition::kVertexLoad,
              "condition (ii): vertex " + std::to_string(v) + " lies in " +
                  std::to_string(load[v]) + " cliques > k=" + std::to_string(k)};
    }
  }

  // (iii)
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.cliques.size(); ++j) {
      const auto& a = cover.cliques[i];
      const auto& b = cover.cliques[j];
      VertexList shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
      if (shared.size() > p) {
        return {false, CoverCondition::kPairIntersection,
                "condition (iii): cliques " + std::to_string(i) + " and " + std::to_string(j) +
                    " share " + std::to_string(shared.size()) + " vertices > p=" +
                    std::to_string(p)};
      }
    }
  }
  return {true, CoverCondition::kNone, "valid"};
}

Hypergraph cover_to_hypergraph(const Graph& g, const CliqueCover& cover, std::uint64_t k,
                               std::uint64_t p) {
  const CoverReport report = validate_cover(g, cover, k, p);
  if (!report.valid) throw InputError("cover is not valid: " + report.diagnostic);

  const std::size_t n = g.num_vertices();
  std::vector<VertexList> edges(n);
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    for (Vertex v : cover.cliques[i]) edges[v].push_back(static_cast<Vertex>(i));
  }
  auto next = static_cast<Vertex>(cover.cliques.size());
  for (Vertex v = 0; v < n; ++v) {
    while (edges[v].size() < k) edges[v].push_back(next++);
  }
  return Hypergraph(next, std::move(edges));
}

CliqueCover hypergraph_to_cover(const Hypergraph& h) {
  std::vector<VertexList> stars(h.num_vertices());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (Vertex x : h.edge(i)) stars[x].push_back(static_cast<Vertex>(i));
  }
  CliqueCover cover{h.num_edges(), {}};
  for (auto& s : stars) {
    if (!s.empty()) cover.cliques.push_back(std::move(s));
  }
  return cover;
}

NotAMemberError::NotAMemberError(Verdict verdict)
    : InputError(std::holds_alternative<NonMember>(verdict)
                     ? "graph is not a member: " +
                           witness_record(std::get<NonMember>(verdict).witness)
                     : "membership is undecided below the edge-degree threshold"),
      verdict_(std::move(verdict)) {}

Reconstruction reconstruct_with_cover(const Graph& g, std::uint64_t k, std::uint64_t p) {
  Verdict verdict = recognize(g, k, p);
  auto* member = std::get_if<Member>(&verdict);
  if (member == nullptr) throw NotAMemberError(std::move(verdict));
  Hypergraph h = cover_to_hypergraph(g, member->cover, k, p);
  return {std::move(member->cover), std::move(h)};
}

Hypergraph reconstruct(const Graph& g, std::uint64_t k, std::uint64_t p) {
  return reconstruct_with_cover(g, k, p).hypergraph;
}

}  // namespace hyperline
