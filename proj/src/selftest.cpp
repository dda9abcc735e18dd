#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperline/baranyai.hpp"
#include "hyperline/cli.hpp"
#include "hyperline/generators.hpp"
#include "hyperline/oracle.hpp"
#include "hyperline/recognition.hpp"
#include "hyperline/reconstruction.hpp"

namespace hyperline::cli {

namespace {

struct Check {
  std::string name;
  std::function<std::string(std::ostringstream&)> run;  // returns "" on success
};

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::string check_thresholds(std::ostringstream& info) {
  const std::uint64_t table[][4] = {{2, 1, 5, 4}, {3, 1, 22, 8}, {2, 2, 15, 10}};
  for (const auto& row : table) {
    const Thresholds t = thresholds(row[0], row[1]);
    if (t.min_edge_degree != row[2] || t.big_clique != row[3]) {
      return "wrong thresholds for k=" + std::to_string(row[0]) + " p=" + std::to_string(row[1]);
    }
  }
  info << "3 (k,p) pairs";
  return "";
}

std::string check_necessity(std::ostringstream& info) {
  std::mt19937_64 rng(20240611);
  std::size_t tested = 0, members = 0;
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t p = 1; p <= 3; ++p) {
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t vertices = k + rng() % (3 * k);
        const Hypergraph h = generators::random_uniform_hypergraph(rng, vertices, k, p, 1 + rng() % 12);
        const Graph g = line_graph(h);
        if (g.num_edges() == 0) continue;
        ++tested;
        const Verdict v = recognize(g, k, p);
        if (std::holds_alternative<NonMember>(v)) {
          return "line graph rejected: " + witness_record(std::get<NonMember>(v).witness);
        }
        if (std::holds_alternative<Member>(v)) ++members;
      }
    }
  }
  info << tested << " line graphs, " << members << " decided member";
  return "";
}

std::string check_oracle_agreement(std::ostringstream& info) {
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
      const Graph g = graph_from_mask(n, mask);
      ++graphs;
      for (std::uint64_t k : {2, 3}) {
        for (std::uint64_t p : {1, 2}) {
          const Verdict v = recognize(g, k, p);
          const bool cover = oracle::is_member_bruteforce(g, k, p);
          if (std::holds_alternative<NonMember>(v) && cover) {
            return "recognizer rejected a graph the oracle covers (n=" + std::to_string(n) + ")";
          }
          if (std::holds_alternative<Member>(v) && !cover) {
            return "recognizer accepted a graph the oracle rejects";
          }
        }
      }
    }
  }
  info << graphs << " graphs x 4 (k,p)";
  return "";
}

std::string check_sufficiency(std::ostringstream& info) {
  std::size_t cases = 0;
  for (const auto& [k, p] : {std::pair<std::uint64_t, std::uint64_t>{2, 1}, {3, 1}, {2, 2}}) {
    const Thresholds t = thresholds(k, p);
    const std::vector<Graph> graphs = {
        generators::complete_graph(t.min_edge_degree + 2),
        line_graph(generators::disjoint_union(generators::sunflower(t.min_edge_degree + 2, k),
                                              generators::sunflower(t.min_edge_degree + 3, k)))};
    for (const Graph& g : graphs) {
      ++cases;
      const Reconstruction r = reconstruct_with_cover(g, k, p);
      if (!(line_graph(r.hypergraph) == g)) return "reconstruction changed the line graph";
      if (!is_k_uniform(r.hypergraph, k) || multiplicity(r.hypergraph) > p) {
        return "reconstruction is not k-uniform with multiplicity <= p";
      }
    }
  }
  info << cases << " threshold graphs";
  return "";
}

std::string check_baranyai(std::ostringstream& info) {
  std::size_t stages = 0;
  for (std::uint32_t n = 2; n <= 8; ++n) {
    for (std::uint32_t k = 2; k <= n; ++k) {
      std::string failure;
      baranyai_partition(n, k, [&](const PartitionState& s) {
        ++stages;
        if (const auto bad = partition_state_violations(s); !bad.empty() && failure.empty()) {
          failure = "N=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + bad.front();
        }
      });
      if (!failure.empty()) return failure;
    }
  }
  info << stages << " intermediate states";
  return "";
}

std::string check_realizability(std::ostringstream& info) {
  const auto report = oracle::scan_regular_realizability(7, 5);
  if (!report.discrepancies.empty()) return report.discrepancies.front();
  info << report.cases << " (N,k,d) cases, " << report.realized << " realized";
  return "";
}

std::string check_kernels(std::ostringstream& info) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 20;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() % 100 < 55) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges);
    const Thresholds t = thresholds(2, 1);
    if (check_claw(g, 2) != serial::check_claw(g, 2) ||
        check_common_neighbors(g, t) != serial::check_common_neighbors(g, t) ||
        check_attachment(g, t) != serial::check_attachment(g, t) ||
        check_overlap(g, t) != serial::check_overlap(g, t)) {
      return "parallel and serial checks disagree";
    }
  }
  info << "60 random graphs";
  return "";
}

std::string check_ground_truths(std::ostringstream& info) {
  const auto claw = recognize(generators::complete_bipartite_graph(1, 3), 2, 1);
  const auto* nm = std::get_if<NonMember>(&claw);
  if (nm == nullptr || !std::holds_alternative<ClawWitness>(nm->witness)) return "K_{1,3} not rejected by a claw";
  const auto k25 = recognize(generators::complete_bipartite_graph(2, 5), 2, 1);
  nm = std::get_if<NonMember>(&k25);
  if (nm == nullptr || !std::holds_alternative<CommonNeighborWitness>(nm->witness)) {
    return "K_{2,5} not rejected by common neighbors";
  }
  if (baranyai_partition(4, 2).classes.size() != 3) return "K_4 should split into 3 matchings";
  info << "K_{1,3}, K_{2,5}, Baranyai(4,2)";
  return "";
}

}  // namespace

int run_selftest(std::ostream& out) {
  const std::vector<Check> checks = {
      {"thresholds", check_thresholds},
      {"necessity", check_necessity},
      {"oracle-agreement", check_oracle_agreement},
      {"sufficiency", check_sufficiency},
      {"baranyai-invariants", check_baranyai},
      {"regular-realizability", check_realizability},
      {"serial-parallel-kernels", check_kernels},
      {"ground-truths", check_ground_truths},
  };
  std::size_t passed = 0;
  for (const auto& c : checks) {
    std::ostringstream info;
    std::string failure;
    try {
      failure = c.run(info);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      ++passed;
      out << "PASS " << c.name << ": " << info.str() << '\n';
    } else {
      out << "FAIL " << c.name << ": " << failure << '\n';
    }
  }
  out << "SELFTEST " << (passed == checks.size() ? "PASS" : "FAIL") << ' ' << passed << '/'
      << checks.size() << '\n';
  return passed == checks.size() ? kOk : kFailure;
}

}  // namespace hyperline::cli
