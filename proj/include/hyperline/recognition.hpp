#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperline/clique_cover.hpp"
#include "hyperline/graph.hpp"

namespace hyperline {

// Bounds derived from uniformity k and pair multiplicity p.
struct Thresholds {
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t min_edge_degree = 0;  // f = p*k^3 + (p-3)*k + 1
  std::uint64_t big_clique = 0;       // s = p*k^2 + (p-2)*k + 2

  std::uint64_t common_neighbor_limit() const { return p * k * k; }  // pk^2
  std::uint64_t attachment_limit() const { return p * k; }           // pk
  std::uint64_t intersection_limit() const { return p; }
};

// Throws InputError unless k >= 2 and p >= 1.
Thresholds thresholds(std::uint64_t k, std::uint64_t p);

// A (k+1)-claw.
struct ClawWitness {
  Claw claw;
  friend bool operator==(const ClawWitness&, const ClawWitness&) = default;
};

// Non-adjacent a < b with pk^2+1 common neighbors.
struct CommonNeighborWitness {
  Vertex a = 0;
  Vertex b = 0;
  VertexList common;
  friend bool operator==(const CommonNeighborWitness&, const CommonNeighborWitness&) = default;
};

// Vertex outside a big maximal clique adjacent to pk+1 of its members.
struct AttachmentWitness {
  VertexList clique;
  Vertex vertex = 0;
  VertexList attached;
  friend bool operator==(const AttachmentWitness&, const AttachmentWitness&) = default;
};

// Two distinct big maximal cliques sharing p+1 vertices.
struct OverlapWitness {
  VertexList first;
  VertexList second;
  VertexList shared;
  friend bool operator==(const OverlapWitness&, const OverlapWitness&) = default;
};

using Witness = std::variant<ClawWitness, CommonNeighborWitness, AttachmentWitness, OverlapWitness>;

struct Member {
  CliqueCover cover;
};
struct NonMember {
  Witness witness;
};
struct Inconclusive {
  std::uint64_t min_edge_degree = 0;
  std::uint64_t required = 0;
};

using Verdict = std::variant<Member, NonMember, Inconclusive>;

// The four forbidden-structure predicates. Each returns the first witness in
// a fixed scan order, trimmed to exactly the threshold count. The default
// versions run their outer scan in parallel; serial:: versions are the
// single-threaded reference and return identical witnesses.
std::optional<Witness> check_claw(const Graph& g, std::uint64_t k);
std::optional<Witness> check_common_neighbors(const Graph& g, const Thresholds& t);
std::optional<Witness> check_attachment(const Graph& g, const Thresholds& t);
std::optional<Witness> check_overlap(const Graph& g, const Thresholds& t);

// Same as above with the maximal clique list precomputed.
std::optional<Witness> check_attachment(const Graph& g, const Thresholds& t,
                                        const std::vector<VertexList>& cliques);
std::optional<Witness> check_overlap(const Thresholds& t, const std::vector<VertexList>& cliques);

namespace serial {
std::optional<Witness> check_claw(const Graph& g, std::uint64_t k);
std::optional<Witness> check_common_neighbors(const Graph& g, const Thresholds& t);
std::optional<Witness> check_attachment(const Graph& g, const Thresholds& t);
std::optional<Witness> check_overlap(const Graph& g, const Thresholds& t);
}  // namespace serial

// Forbidden structures first (common neighbors, claw, attachment, overlap),
// then the edge-degree threshold. Throws InputError on an edgeless graph or
// bad (k, p).
Verdict recognize(const Graph& g, std::uint64_t k, std::uint64_t p);

// One-line machine-readable record, e.g. "claw center=0 leaves=1,2,3".
std::string witness_record(const Witness& w);
// Plain-language reading of the same witness.
std::string witness_explanation(const Witness& w, const Thresholds& t);

}  // namespace hyperline
