#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hyperline/flow.hpp"
#include "hyperline/hypergraph.hpp"

namespace hyperline {

// Partial sets are bitmasks over the ground set [N] = {1..N}: element j is
// bit j-1. N is limited to 63.
using PartialSet = std::uint64_t;

// M classes of partial sets T over [ell], each class a multiset (mask ->
// multiplicity). Grows one element per extend() until ell == N, at which point
// the classes partition all k-subsets of [N].
struct PartitionState {
  std::uint32_t n = 0;     // ground set size N
  std::uint32_t k = 0;
  std::uint32_t ell = 0;   // alphabet [ell] handled so far
  std::uint64_t lcm = 0;   // L = lcm(N, k)
  std::uint64_t classes_count = 0;  // M = k C(N,k) / L
  std::vector<std::map<PartialSet, std::uint64_t>> classes;

  std::uint64_t sets_per_class() const { return lcm / k; }       // L/k
  std::uint64_t element_per_class() const { return lcm / n; }    // L/N
};

// Base case ell = 1: each class holds L/N copies of {1} and L/k - L/N copies
// of the empty set. Throws InputError unless 1 <= k <= N <= 63, and
// ResourceError when C(N,k) or k*C(N,k) does not fit the 2^62 guard.
PartitionState initial_partition_state(std::uint32_t n, std::uint32_t k);

enum class ArcRole { kSource, kMember, kSink };

// What each arc of an extension network stands for. Member arcs are the
// unit arcs class -> T, one per copy of T in the class.
struct ArcLabel {
  ArcRole role = ArcRole::kMember;
  std::size_t class_index = 0;  // kSource, kMember
  PartialSet set = 0;           // kMember, kSink
  std::uint64_t copy = 0;       // kMember
};

struct ExtensionNetwork {
  FlowNetwork network;          // node 0 source, node 1 sink, then classes, then sets
  std::vector<ArcLabel> labels; // parallel to network.arcs
  std::vector<PartialSet> set_nodes;  // sets with |T| < k, ascending mask order
};

// Source -> class arcs of capacity L/N, one unit arc per copy of each T with
// |T| < k, and T -> sink arcs of capacity C(N-1-ell, k-|T|-1). Throws
// InputError when ell == N.
ExtensionNetwork build_extension_network(const PartitionState& state);

// Required value of every saturating flow: C(N-1, k-1).
std::uint64_t saturation_value(const PartitionState& state);

// Adds element ell+1 to one copy of T for every saturated unit arc. Throws
// InputError when ell == N and InternalError if the maximum flow falls short
// of saturation_value().
PartitionState extend(const PartitionState& state);

// Human-readable list of broken invariants (empty when all hold): per-class
// set count L/k, per-class element count L/N, global count C(N-ell, k-|T|),
// and at ell == N the exact-partition property.
std::vector<std::string> partition_state_violations(const PartitionState& state);

struct BaranyaiPartition {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t lcm = 0;
  // classes[i] lists the k-subsets of class i (elements 1..N), sorted.
  std::vector<std::vector<VertexList>> classes;
};

using PartitionObserver = std::function<void(const PartitionState&)>;

// Runs the base case and N-1 extensions. The observer, when given, sees the
// state at every ell from 1 to N.
BaranyaiPartition baranyai_partition(std::uint32_t n, std::uint32_t k,
                                     const PartitionObserver& observer = {});

struct RegularHypergraph {
  Hypergraph hypergraph;          // vertices 0..N-1
  std::uint64_t classes_used = 0; // q = dN / L
  bool repeats_classes = false;   // q > M: classes reused, edges repeat
};

// Union of the first q = dN/L partition classes; when q exceeds the class
// count the classes are reused cyclically unless strict_simple is set.
// Throws UnrealizableError when k does not divide d*N, or when strict_simple
// is set and q > M. Throws InputError unless N >= k >= 2 and d >= 1.
RegularHypergraph regular_hypergraph(std::uint32_t n, std::uint32_t k, std::uint64_t d,
                                     bool strict_simple = false);
RegularHypergraph regular_hypergraph(const BaranyaiPartition& partition, std::uint64_t d,
                                     bool strict_simple = false);

}  // namespace hyperline
