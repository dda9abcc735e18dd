#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperline/clique_cover.hpp"
#include "hyperline/error.hpp"
#include "hyperline/graph.hpp"
#include "hyperline/hypergraph.hpp"
#include "hyperline/recognition.hpp"

namespace hyperline {

// Which cover condition failed first.
enum class CoverCondition {
  kNone,
  kEdgeCovered,       // (i) every edge inside some entry
  kVertexLoad,        // (ii) every vertex in at most k entries
  kPairIntersection,  // (iii) distinct entries share at most p vertices
};

struct CoverReport {
  bool valid = false;
  CoverCondition failed = CoverCondition::kNone;
  std::string diagnostic;
};

// All maximal cliques of size >= s, in lexicographic order. Throws
// InternalError when the family is not a valid cover, which means the caller's
// claim that g passed the forbidden-structure checks and the edge-degree
// threshold was false.
CliqueCover krausz_cover(const Graph& g, const Thresholds& t);
CliqueCover krausz_cover(const Graph& g, const Thresholds& t,
                         const std::vector<VertexList>& maximal);

// Throws InputError if an entry leaves [0, n) or is not a clique of g.
CoverReport validate_cover(const Graph& g, const CliqueCover& cover, std::uint64_t k,
                           std::uint64_t p);

// Pads vertex v with k - g(v) singleton entries and returns the hypergraph
// whose vertices are the padded entries (original entries first, then the
// singletons by vertex and copy) and whose edge v is the set of entries
// containing v. Its line graph is g with the identity vertex map.
// Throws InputError if validate_cover fails.
Hypergraph cover_to_hypergraph(const Graph& g, const CliqueCover& cover, std::uint64_t k,
                               std::uint64_t p);

// One entry per hypergraph vertex with a nonempty star, holding the indices of
// the edges through it. A cover of line_graph(h).
CliqueCover hypergraph_to_cover(const Hypergraph& h);

class NotAMemberError : public InputError {
 public:
  explicit NotAMemberError(Verdict verdict);
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

struct Reconstruction {
  CliqueCover cover;
  Hypergraph hypergraph;
};

// Recognizes g and, on a Member verdict, builds the witness hypergraph.
// Throws NotAMemberError for any other verdict.
Reconstruction reconstruct_with_cover(const Graph& g, std::uint64_t k, std::uint64_t p);
Hypergraph reconstruct(const Graph& g, std::uint64_t k, std::uint64_t p);

}  // namespace hyperline
