#include "hyperline/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hyperline/combinatorics.hpp"
#include "hyperline/error.hpp"

namespace hyperline::io {

namespace {

// Yields the numeric tokens of each non-empty, comment-stripped line.
class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      tokens.clear();
      for (std::string tok; ls >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> expect(const char* what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) fail(std::string("unexpected end of input, expected ") + what);
    return tokens;
  }

  std::uint64_t number(const std::string& tok) const {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
        tok.size() > 18) {
      fail("expected a nonnegative integer, got '" + tok + "'");
    }
    return std::stoull(tok);
  }

  std::vector<std::uint64_t> numbers(const std::vector<std::string>& tokens,
                                     std::size_t from = 0) const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = from; i < tokens.size(); ++i) out.push_back(number(tokens[i]));
    return out;
  }

  void expect_end() {
    std::vector<std::string> tokens;
    if (next(tokens)) fail("trailing content after the declared records");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

std::vector<std::uint64_t> header(LineReader& in, const char* tag, std::size_t fields) {
  const auto tokens = in.expect("header");
  if (tokens.front() != tag || tokens.size() != fields + 1) {
    in.fail(std::string("expected header '") + tag + "' with " + std::to_string(fields) +
            " fields");
  }
  return in.numbers(tokens, 1);
}

VertexList as_vertices(const std::vector<std::uint64_t>& xs) {
  return VertexList(xs.begin(), xs.end());
}

void write_list(std::ostream& os, const VertexList& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  os << '\n';
}

template <typename T, typename Reader>
T load(const std::string& path, Reader read) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read(in);
}

}  // namespace

void write_hypergraph(std::ostream& os, const Hypergraph& h) {
  os << "H " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) write_list(os, e);
}

Hypergraph read_hypergraph(std::istream& is) {
  LineReader in(is);
  const auto head = header(in, "H", 2);
  std::vector<VertexList> edges;
  for (std::uint64_t i = 0; i < head[1]; ++i) {
    const auto xs = in.numbers(in.expect("an edge line"));
    for (std::size_t j = 1; j < xs.size(); ++j) {
      if (xs[j] <= xs[j - 1]) in.fail("edge vertices must be strictly increasing");
    }
    for (auto x : xs) {
      if (x >= head[0]) in.fail("vertex " + std::to_string(x) + " out of range");
    }
    edges.push_back(as_vertices(xs));
  }
  in.expect_end();
  return Hypergraph(head[0], std::move(edges));
}

void write_graph(std::ostream& os, const Graph& g) {
  os << "G " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& is) {
  LineReader in(is);
  const auto head = header(in, "G", 2);
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < head[1]; ++i) {
    const auto xs = in.numbers(in.expect("an edge line"));
    if (xs.size() != 2) in.fail("an edge line holds exactly two vertices");
    if (xs[0] >= head[0] || xs[1] >= head[0]) in.fail("vertex out of range");
    if (xs[0] == xs[1]) in.fail("self-loop");
    edges.emplace_back(static_cast<Vertex>(xs[0]), static_cast<Vertex>(xs[1]));
  }
  in.expect_end();
  Graph g(head[0], edges);
  if (g.num_edges() != head[1]) in.fail("duplicate edges in graph file");
  return g;
}

void write_partition(std::ostream& os, const BaranyaiPartition& partition) {
  os << "B " << partition.n << ' ' << partition.k << ' ' << partition.classes.size() << '\n';
  for (std::size_t i = 0; i < partition.classes.size(); ++i) {
    os << "S " << i + 1 << ' ' << partition.classes[i].size() << '\n';
    for (const auto& set : partition.classes[i]) write_list(os, set);
  }
}

BaranyaiPartition read_partition(std::istream& is) {
  LineReader in(is);
  const auto head = header(in, "B", 3);
  if (head[0] > 63 || head[1] < 1 || head[1] > head[0]) in.fail("need 1 <= k <= N <= 63");
  BaranyaiPartition out;
  out.n = static_cast<std::uint32_t>(head[0]);
  out.k = static_cast<std::uint32_t>(head[1]);
  out.lcm = checked_lcm(out.n, out.k);
  for (std::uint64_t i = 0; i < head[2]; ++i) {
    const auto block = header(in, "S", 2);
    if (block[0] != i + 1) in.fail("class blocks must be numbered 1..M in order");
    std::vector<VertexList> sets;
    for (std::uint64_t j = 0; j < block[1]; ++j) {
      const auto xs = in.numbers(in.expect("a k-set line"));
      if (xs.size() != out.k) in.fail("set does not have k elements");
      for (std::size_t t = 0; t < xs.size(); ++t) {
        if (xs[t] < 1 || xs[t] > out.n) in.fail("element out of range 1..N");
        if (t > 0 && xs[t] <= xs[t - 1]) in.fail("set elements must be strictly increasing");
      }
      sets.push_back(as_vertices(xs));
    }
    out.classes.push_back(std::move(sets));
  }
  in.expect_end();
  return out;
}

void write_cover(std::ostream& os, const CliqueCover& cover) {
  os << "C " << cover.num_vertices << ' ' << cover.cliques.size() << '\n';
  for (const auto& c : cover.cliques) write_list(os, c);
}

CliqueCover read_cover(std::istream& is) {
  LineReader in(is);
  const auto head = header(in, "C", 2);
  CliqueCover cover{head[0], {}};
  for (std::uint64_t i = 0; i < head[1]; ++i) {
    const auto xs = in.numbers(in.expect("a cover entry"));
    for (std::size_t t = 0; t < xs.size(); ++t) {
      if (xs[t] >= head[0]) in.fail("vertex out of range");
      if (t > 0 && xs[t] <= xs[t - 1]) in.fail("entry vertices must be strictly increasing");
    }
    cover.cliques.push_back(as_vertices(xs));
  }
  in.expect_end();
  return cover;
}

Hypergraph load_hypergraph(const std::string& path) {
  return load<Hypergraph>(path, [](std::istream& is) { return read_hypergraph(is); });
}
Graph load_graph(const std::string& path) {
  return load<Graph>(path, [](std::istream& is) { return read_graph(is); });
}
BaranyaiPartition load_partition(const std::string& path) {
  return load<BaranyaiPartition>(path, [](std::istream& is) { return read_partition(is); });
}
CliqueCover load_cover(const std::string& path) {
  return load<CliqueCover>(path, [](std::istream& is) { return read_cover(is); });
}

}  // namespace hyperline::io
