// Serial reference vs OpenMP kernels for the recognition scans. Inputs are
// line graphs of random hypergraphs, so no scan finds a witness and each
// kernel runs to completion.
#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "hyperline/generators.hpp"
#include "hyperline/recognition.hpp"

using namespace hyperline;

namespace {

constexpr std::uint64_t kK = 3;
constexpr std::uint64_t kP = 2;

const Graph& input(std::int64_t edges) {
  static std::map<std::int64_t, Graph> cache;
  auto it = cache.find(edges);
  if (it == cache.end()) {
    std::mt19937_64 rng(99);
    const auto vertices = static_cast<std::size_t>(edges / 3 + 10);
    const Hypergraph h = generators::random_uniform_hypergraph(
        rng, vertices, kK, kP, static_cast<std::size_t>(edges));
    it = cache.emplace(edges, line_graph(h)).first;
  }
  return it->second;
}

template <auto Kernel>
void run_threshold_kernel(benchmark::State& state) {
  const Graph& g = input(state.range(0));
  const Thresholds t = thresholds(kK, kP);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, t));
  state.counters["vertices"] = static_cast<double>(g.num_vertices());
}

template <auto Kernel>
void run_claw_kernel(benchmark::State& state) {
  const Graph& g = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, kK));
  state.counters["vertices"] = static_cast<double>(g.num_vertices());
}

// Unambiguous names for the overloaded parallel entry points.
std::optional<Witness> parallel_common(const Graph& g, const Thresholds& t) {
  return check_common_neighbors(g, t);
}
std::optional<Witness> parallel_attachment(const Graph& g, const Thresholds& t) {
  return check_attachment(g, t);
}
std::optional<Witness> parallel_overlap(const Graph& g, const Thresholds& t) {
  return check_overlap(g, t);
}

}  // namespace

#define SIZES ->Arg(200)->Arg(800)->Arg(2000)->Unit(benchmark::kMillisecond)

BENCHMARK(run_claw_kernel<serial::check_claw>)->Name("claw/serial") SIZES;
BENCHMARK(run_claw_kernel<check_claw>)->Name("claw/parallel") SIZES;
BENCHMARK(run_threshold_kernel<serial::check_common_neighbors>)->Name("common/serial") SIZES;
BENCHMARK(run_threshold_kernel<parallel_common>)->Name("common/parallel") SIZES;
BENCHMARK(run_threshold_kernel<serial::check_attachment>)->Name("attachment/serial") SIZES;
BENCHMARK(run_threshold_kernel<parallel_attachment>)->Name("attachment/parallel") SIZES;
BENCHMARK(run_threshold_kernel<serial::check_overlap>)->Name("overlap/serial") SIZES;
BENCHMARK(run_threshold_kernel<parallel_overlap>)->Name("overlap/parallel") SIZES;

BENCHMARK_MAIN();
