#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperline {

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::uint64_t capacity = 0;
};

// Directed network with integer capacities. Parallel arcs are distinct arcs.
struct FlowNetwork {
  std::size_t num_nodes = 0;
  std::size_t source = 0;
  std::size_t sink = 1;
  std::vector<Arc> arcs;

  // Returns the arc index.
  std::size_t add_arc(std::size_t from, std::size_t to, std::uint64_t capacity) {
    arcs.push_back({from, to, capacity});
    return arcs.size() - 1;
  }
};

struct Flow {
  std::vector<std::uint64_t> arc_flow;  // indexed like FlowNetwork::arcs
  std::uint64_t value = 0;
};

// Integral maximum flow (Dinic). Adjacency is scanned in arc-insertion order,
// so the result is a deterministic function of the network. Throws InputError
// on an out-of-range endpoint, source == sink, an arc into the source or out
// of the sink.
Flow max_flow(const FlowNetwork& net);

}  // namespace hyperline
