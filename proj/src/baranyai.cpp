#include "hyperline/baranyai.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "hyperline/combinatorics.hpp"
#include "hyperline/error.hpp"

namespace hyperline {

namespace {

constexpr std::size_t kSourceNode = 0;
constexpr std::size_t kSinkNode = 1;
constexpr std::size_t kFirstClassNode = 2;

std::uint32_t size_of(PartialSet t) { return static_cast<std::uint32_t>(std::popcount(t)); }

PartialSet element_bit(std::uint32_t j) { return PartialSet{1} << (j - 1); }

std::string set_text(PartialSet t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::uint32_t j = 1; j <= 63; ++j) {
    if (t & element_bit(j)) {
      os << (first ? "" : ",") << j;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace

PartitionState initial_partition_state(std::uint32_t n, std::uint32_t k) {
  if (k < 1) throw InputError("k must be >= 1");
  if (k > n) throw InputError("k must not exceed N");
  if (n > 63) throw InputError("N is limited to 63");
  PartitionState s;
  s.n = n;
  s.k = k;
  s.ell = 1;
  s.lcm = checked_lcm(n, k);
  const std::uint64_t all = binomial(n, k);
  (void)binomial(n - 1, k - 1);  // overflow guard for the saturation value
  s.classes_count = checked_mul(k, all) / s.lcm;
  const std::uint64_t with_one = s.element_per_class();
  const std::uint64_t without = s.sets_per_class() - with_one;
  s.classes.assign(s.classes_count, {});
  for (auto& cls : s.classes) {
    cls[element_bit(1)] = with_one;
    if (without > 0) cls[0] = without;
  }
  return s;
}

std::uint64_t saturation_value(const PartitionState& state) {
  return binomial(state.n - 1, state.k - 1);
}

ExtensionNetwork build_extension_network(const PartitionState& state) {
  if (state.ell >= state.n) throw InputError("partition state is already complete (ell == N)");
  ExtensionNetwork out;
  std::set<PartialSet> open_sets;
  for (const auto& cls : state.classes) {
    for (const auto& [t, mult] : cls) {
      if (mult > 0 && size_of(t) < state.k) open_sets.insert(t);
    }
  }
  out.set_nodes.assign(open_sets.begin(), open_sets.end());
  const std::size_t first_set_node = kFirstClassNode + state.classes.size();
  auto set_node = [&](PartialSet t) {
    const auto it = std::lower_bound(out.set_nodes.begin(), out.set_nodes.end(), t);
    return first_set_node + static_cast<std::size_t>(it - out.set_nodes.begin());
  };

  FlowNetwork& net = out.network;
  net.num_nodes = first_set_node + out.set_nodes.size();
  net.source = kSourceNode;
  net.sink = kSinkNode;
  for (std::size_t i = 0; i < state.classes.size(); ++i) {
    const std::size_t class_node = kFirstClassNode + i;
    net.add_arc(kSourceNode, class_node, state.element_per_class());
    out.labels.push_back({ArcRole::kSource, i, 0, 0});
    for (const auto& [t, mult] : state.classes[i]) {
      if (size_of(t) >= state.k) continue;
      for (std::uint64_t c = 0; c < mult; ++c) {
        net.add_arc(class_node, set_node(t), 1);
        out.labels.push_back({ArcRole::kMember, i, t, c});
      }
    }
  }
  const auto remaining = static_cast<std::int64_t>(state.n) - 1 - state.ell;
  for (PartialSet t : out.set_nodes) {
    const auto missing = static_cast<std::int64_t>(state.k) - size_of(t) - 1;
    net.add_arc(set_node(t), kSinkNode, binomial(remaining, missing));
    out.labels.push_back({ArcRole::kSink, 0, t, 0});
  }
  return out;
}

PartitionState extend(const PartitionState& state) {
  const ExtensionNetwork ext = build_extension_network(state);
  const Flow flow = max_flow(ext.network);
  const std::uint64_t expected = saturation_value(state);
  if (flow.value != expected) {
    throw InternalError("extension flow at ell=" + std::to_string(state.ell) + " has value " +
                        std::to_string(flow.value) + ", expected C(N-1,k-1)=" +
                        std::to_string(expected));
  }
  PartitionState next = state;
  next.ell = state.ell + 1;
  const PartialSet added = element_bit(next.ell);
  for (std::size_t a = 0; a < ext.labels.size(); ++a) {
    const ArcLabel& label = ext.labels[a];
    if (label.role != ArcRole::kMember || flow.arc_flow[a] == 0) continue;
    auto& cls = next.classes[label.class_index];
    if (--cls[label.set] == 0) cls.erase(label.set);
    ++cls[label.set | added];
  }
  return next;
}

std::vector<std::string> partition_state_violations(const PartitionState& s) {
  std::vector<std::string> out;
  if (s.classes.size() != s.classes_count) {
    out.push_back("class count " + std::to_string(s.classes.size()) + " != M=" +
                  std::to_string(s.classes_count));
  }
  const PartialSet universe = s.ell >= 64 ? ~PartialSet{0} : (PartialSet{1} << s.ell) - 1;
  std::map<PartialSet, std::uint64_t> global;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    std::uint64_t sets = 0;
    std::vector<std::uint64_t> per_element(s.ell + 1, 0);
    for (const auto& [t, mult] : s.classes[i]) {
      if ((t & ~universe) != 0 || size_of(t) > s.k) {
        out.push_back("class " + std::to_string(i) + " holds invalid partial set " + set_text(t));
      }
      sets += mult;
      for (std::uint32_t j = 1; j <= s.ell; ++j) {
        if (t & element_bit(j)) per_element[j] += mult;
      }
      global[t] += mult;
    }
    total += sets;
    if (sets != s.sets_per_class()) {
      out.push_back("class " + std::to_string(i) + " holds " + std::to_string(sets) +
                    " sets, expected L/k=" + std::to_string(s.sets_per_class()));
    }
    for (std::uint32_t j = 1; j <= s.ell; ++j) {
      if (per_element[j] != s.element_per_class()) {
        out.push_back("class " + std::to_string(i) + " covers element " + std::to_string(j) + " " +
                      std::to_string(per_element[j]) + " times, expected L/N=" +
                      std::to_string(s.element_per_class()));
      }
    }
  }
  // Present sets must carry exactly C(N-ell, k-|T|) copies in total; the
  // grand total C(N,k) then rules out a missing set with a nonzero target.
  for (const auto& [t, mult] : global) {
    const std::uint64_t want = binomial(static_cast<std::int64_t>(s.n) - s.ell,
                                        static_cast<std::int64_t>(s.k) - size_of(t));
    if (mult != want) {
      out.push_back("set " + set_text(t) + " appears " + std::to_string(mult) +
                    " times, expected C(N-ell,k-|T|)=" + std::to_string(want));
    }
  }
  if (total != binomial(s.n, s.k)) {
    out.push_back("total set count " + std::to_string(total) + " != C(N,k)=" +
                  std::to_string(binomial(s.n, s.k)));
  }
  if (s.ell == s.n) {
    for (const auto& [t, mult] : global) {
      if (size_of(t) != s.k || mult != 1) {
        out.push_back("final state is not a partition: " + set_text(t) + " appears " +
                      std::to_string(mult) + " times");
      }
    }
  }
  return out;
}

BaranyaiPartition baranyai_partition(std::uint32_t n, std::uint32_t k,
                                     const PartitionObserver& observer) {
  PartitionState state = initial_partition_state(n, k);
  if (observer) observer(state);
  while (state.ell < state.n) {
    state = extend(state);
    if (observer) observer(state);
  }
  if (const auto bad = partition_state_violations(state); !bad.empty()) {
    throw InternalError("final partition state is inconsistent: " + bad.front());
  }
  BaranyaiPartition out{n, k, state.lcm, {}};
  out.classes.reserve(state.classes.size());
  for (const auto& cls : state.classes) {
    std::vector<VertexList> sets;
    for (const auto& [t, mult] : cls) {
      VertexList members;
      for (std::uint32_t j = 1; j <= n; ++j) {
        if (t & element_bit(j)) members.push_back(j);
      }
      for (std::uint64_t c = 0; c < mult; ++c) sets.push_back(members);
    }
    std::sort(sets.begin(), sets.end());
    out.classes.push_back(std::move(sets));
  }
  return out;
}

RegularHypergraph regular_hypergraph(std::uint32_t n, std::uint32_t k, std::uint64_t d,
                                     bool strict_simple) {
  if (k < 2 || n < k) throw InputError("need N >= k >= 2");
  if (d < 1) throw InputError("need d >= 1");
  if ((checked_mul(d, n) % k) != 0) {
    throw UnrealizableError("k does not divide d*N");
  }
  return regular_hypergraph(baranyai_partition(n, k), d, strict_simple);
}

RegularHypergraph regular_hypergraph(const BaranyaiPartition& partition, std::uint64_t d,
                                     bool strict_simple) {
  const std::uint32_t n = partition.n;
  const std::uint32_t k = partition.k;
  if (k < 2 || n < k) throw InputError("need N >= k >= 2");
  if (d < 1) throw InputError("need d >= 1");
  const std::uint64_t dn = checked_mul(d, n);
  if (dn % k != 0) throw UnrealizableError("k does not divide d*N");
  // k | dN is equivalent to L/N | d, so q = dN/L is an integer.
  const std::uint64_t q = dn / partition.lcm;
  const std::uint64_t m = partition.classes.size();
  if (strict_simple && q > m) {
    throw UnrealizableError("d exceeds C(N-1,k-1); no simple k-uniform hypergraph has this degree");
  }
  std::vector<VertexList> edges;
  edges.reserve(dn / k);
  for (std::uint64_t i = 0; i < q; ++i) {
    for (const auto& set : partition.classes[i % m]) {
      VertexList e;
      e.reserve(set.size());
      for (Vertex j : set) e.push_back(j - 1);
      edges.push_back(std::move(e));
    }
  }
  return {Hypergraph(n, std::move(edges)), q, q > m};
}

}  // namespace hyperline
