#include "hyperline/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "hyperline/error.hpp"

namespace hyperline {

namespace {

void validate(const FlowNetwork& net) {
  if (net.source >= net.num_nodes || net.sink >= net.num_nodes) {
    throw InputError("source or sink outside the node range");
  }
  if (net.source == net.sink) throw InputError("source and sink coincide");
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    if (a.from >= net.num_nodes || a.to >= net.num_nodes) {
      throw InputError("arc " + std::to_string(i) + " has an endpoint outside the node range");
    }
    if (a.to == net.source) throw InputError("arc " + std::to_string(i) + " enters the source");
    if (a.from == net.sink) throw InputError("arc " + std::to_string(i) + " leaves the sink");
  }
}

// Residual graph: arc 2i is network arc i, arc 2i+1 its reverse.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net), out_(net.num_nodes), level_(net.num_nodes), cursor_(net.num_nodes) {
    residual_.reserve(2 * net.arcs.size());
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      out_[net.arcs[i].from].push_back(2 * i);
      out_[net.arcs[i].to].push_back(2 * i + 1);
      residual_.push_back(net.arcs[i].capacity);
      residual_.push_back(0);
    }
  }

  Flow run() {
    std::uint64_t total = 0;
    while (build_levels()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (const std::uint64_t pushed =
                 augment(net_.source, std::numeric_limits<std::uint64_t>::max())) {
        total += pushed;
      }
    }
    Flow f;
    f.value = total;
    f.arc_flow.resize(net_.arcs.size());
    for (std::size_t i = 0; i < net_.arcs.size(); ++i) f.arc_flow[i] = residual_[2 * i + 1];
    return f;
  }

 private:
  std::size_t head(std::size_t r) const { return r % 2 == 0 ? net_.arcs[r / 2].to : net_.arcs[r / 2].from; }

  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[net_.source] = 0;
    q.push(net_.source);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t r : out_[u]) {
        const std::size_t v = head(r);
        if (residual_[r] > 0 && level_[v] < 0) {
          level_[v] = level_[u] + 1;
          q.push(v);
        }
      }
    }
    return level_[net_.sink] >= 0;
  }

  std::uint64_t augment(std::size_t u, std::uint64_t limit) {
    if (u == net_.sink) return limit;
    for (auto& i = cursor_[u]; i < out_[u].size(); ++i) {
      const std::size_t r = out_[u][i];
      const std::size_t v = head(r);
      if (residual_[r] == 0 || level_[v] != level_[u] + 1) continue;
      const std::uint64_t pushed = augment(v, std::min(limit, residual_[r]));
      if (pushed > 0) {
        residual_[r] -= pushed;
        residual_[r ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::uint64_t> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

Flow max_flow(const FlowNetwork& net) {
  validate(net);
  return Dinic(net).run();
}

}  // namespace hyperline
