#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperline/clique_cover.hpp"
#include "hyperline/graph.hpp"

// Brute-force ground truth for small instances. Nothing here shares code
// paths with the threshold-based recognizer.
namespace hyperline::oracle {

inline constexpr std::size_t kDefaultSizeBound = 8;
inline constexpr std::size_t kMaxSizeBound = 11;
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;
inline constexpr std::size_t kIsomorphismBound = 10;

// Exhaustive search for a clique cover with every vertex in at most k entries
// and pairwise entry intersections at most p. Edges are covered in
// lexicographic order, each by some clique through it, so a nullopt result is
// definitive. Throws ResourceError when n exceeds size_bound (itself capped at
// kMaxSizeBound) or the search visits more than `budget` nodes.
std::optional<CliqueCover> cover_search(const Graph& g, std::uint64_t k, std::uint64_t p,
                                        std::uint64_t budget = kDefaultBudget,
                                        std::size_t size_bound = kDefaultSizeBound);

bool is_member_bruteforce(const Graph& g, std::uint64_t k, std::uint64_t p,
                          std::uint64_t budget = kDefaultBudget,
                          std::size_t size_bound = kDefaultSizeBound);

// Backtracking isomorphism test with degree pruning, up to 10 vertices.
bool graphs_isomorphic(const Graph& a, const Graph& b);

struct RealizabilityReport {
  std::size_t cases = 0;
  std::size_t realized = 0;
  std::vector<std::string> discrepancies;
};

// For every 2 <= k <= min(N, k_max), k <= N <= N_max and 1 <= d <= C(N-1,k-1):
// regular_hypergraph must succeed exactly when k | dN and then produce a
// simple k-uniform hypergraph with every degree equal to d. Throws InputError
// for N_max > 16.
RealizabilityReport scan_regular_realizability(std::uint32_t n_max, std::uint32_t k_max);

}  // namespace hyperline::oracle
