#include "hyperline/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hyperline/baranyai.hpp"
#include "hyperline/error.hpp"
#include "hyperline/graph.hpp"
#include "hyperline/io.hpp"
#include "hyperline/oracle.hpp"
#include "hyperline/recognition.hpp"
#include "hyperline/reconstruction.hpp"

namespace hyperline::cli {

namespace {

// Writes through `write` to `path`, or to `out` when no path was given.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  write(file);
}

void print_cover_lines(std::ostream& out, const CliqueCover& cover, const char* prefix = "") {
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    out << prefix << "K " << i << ' ';
    const auto& c = cover.cliques[i];
    for (std::size_t j = 0; j < c.size(); ++j) out << (j ? "," : "") << c[j];
    out << '\n';
  }
}

struct Options {
  std::string in;
  std::string out;
  std::string cover_out;
  std::string second;
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  std::uint32_t n = 0;
  std::uint64_t budget = oracle::kDefaultBudget;
  std::size_t size_bound = oracle::kDefaultSizeBound;
  bool oracle_fallback = false;
  bool strict_simple = false;
};

int cmd_linegraph(const Options& o, std::ostream& out) {
  const Graph g = line_graph(io::load_hypergraph(o.in));
  emit(o.out, out, [&](std::ostream& os) { io::write_graph(os, g); });
  return kOk;
}

int print_oracle_result(const std::optional<CliqueCover>& cover, std::ostream& out,
                        const char* tag) {
  if (cover) {
    out << tag << "MEMBER cover=" << cover->cliques.size() << '\n';
    print_cover_lines(out, *cover);
    out << "# exhaustive search found a clique cover meeting the load and overlap bounds\n";
    return kOk;
  }
  out << tag << "NONMEMBER no-cover\n";
  out << "# exhaustive search: no clique cover meets the load and overlap bounds\n";
  return kNegative;
}

int cmd_recognize(const Options& o, std::ostream& out) {
  const Graph g = io::load_graph(o.in);
  const Thresholds t = thresholds(o.k, o.p);
  const Verdict verdict = recognize(g, o.k, o.p);
  if (const auto* m = std::get_if<Member>(&verdict)) {
    out << "MEMBER cover=" << m->cover.cliques.size() << '\n';
    print_cover_lines(out, m->cover);
    out << "# no forbidden structure and minimum edge degree >= f(k,p) = " << t.min_edge_degree
        << "; the maximal cliques of size >= " << t.big_clique << " form a valid cover\n";
    return kOk;
  }
  if (const auto* nm = std::get_if<NonMember>(&verdict)) {
    out << "NONMEMBER " << witness_record(nm->witness) << '\n';
    out << "# " << witness_explanation(nm->witness, t) << '\n';
    return kNegative;
  }
  const auto& inc = std::get<Inconclusive>(verdict);
  out << "INCONCLUSIVE min_edge_degree=" << inc.min_edge_degree << " required=" << inc.required
      << '\n';
  out << "# no forbidden structure, but the minimum edge degree is below f(k,p); the "
         "threshold test does not decide membership\n";
  if (!o.oracle_fallback) return kOk;
  if (g.num_vertices() > oracle::kDefaultSizeBound) {
    out << "# oracle fallback skipped: " << g.num_vertices() << " vertices > "
        << oracle::kDefaultSizeBound << '\n';
    return kOk;
  }
  return print_oracle_result(oracle::cover_search(g, o.k, o.p, o.budget), out, "ORACLE ");
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  const Graph g = io::load_graph(o.in);
  Reconstruction r;
  try {
    r = reconstruct_with_cover(g, o.k, o.p);
  } catch (const NotAMemberError& e) {
    if (const auto* nm = std::get_if<NonMember>(&e.verdict())) {
      out << "NONMEMBER " << witness_record(nm->witness) << '\n';
      out << "# " << witness_explanation(nm->witness, thresholds(o.k, o.p)) << '\n';
      return kNegative;
    }
    throw;
  }
  emit(o.out, out, [&](std::ostream& os) {
    os << "# reconstructed " << o.k << "-uniform hypergraph, multiplicity <= " << o.p
       << "; edge i is graph vertex i\n";
    os << "# cover C " << r.cover.num_vertices << ' ' << r.cover.cliques.size() << '\n';
    print_cover_lines(os, r.cover, "# ");
    io::write_hypergraph(os, r.hypergraph);
  });
  if (!o.cover_out.empty()) {
    emit(o.cover_out, out, [&](std::ostream& os) { io::write_cover(os, r.cover); });
  }
  return kOk;
}

int cmd_baranyai(const Options& o, std::ostream& out) {
  const BaranyaiPartition partition =
      baranyai_partition(o.n, static_cast<std::uint32_t>(o.k));
  emit(o.out, out, [&](std::ostream& os) { io::write_partition(os, partition); });
  return kOk;
}

int cmd_regular(const Options& o, std::ostream& out) {
  RegularHypergraph r;
  try {
    r = regular_hypergraph(o.n, static_cast<std::uint32_t>(o.k), o.d, o.strict_simple);
  } catch (const UnrealizableError& e) {
    out << "NOT REALIZABLE: " << e.what() << " (N=" << o.n << ", k=" << o.k << ", d=" << o.d
        << ")\n";
    return kNegative;
  }
  emit(o.out, out, [&](std::ostream& os) {
    os << "# " << o.k << "-uniform hypergraph on " << o.n << " vertices, every degree " << o.d
       << "; union of " << r.classes_used << " partition classes\n";
    if (r.repeats_classes) os << "# classes reused cyclically: edges repeat\n";
    io::write_hypergraph(os, r.hypergraph);
  });
  return kOk;
}

int cmd_oracle_cover(const Options& o, std::ostream& out) {
  const Graph g = io::load_graph(o.in);
  thresholds(o.k, o.p);
  return print_oracle_result(oracle::cover_search(g, o.k, o.p, o.budget, o.size_bound), out, "");
}

int cmd_oracle_iso(const Options& o, std::ostream& out) {
  const bool iso = oracle::graphs_isomorphic(io::load_graph(o.in), io::load_graph(o.second));
  out << (iso ? "ISOMORPHIC" : "NOT ISOMORPHIC") << '\n';
  return iso ? kOk : kNegative;
}

int cmd_oracle_scan(const Options& o, std::ostream& out) {
  const auto report = oracle::scan_regular_realizability(o.n, static_cast<std::uint32_t>(o.k));
  out << "SCAN N_max=" << o.n << " k_max=" << o.k << " cases=" << report.cases
      << " realized=" << report.realized << " discrepancies=" << report.discrepancies.size()
      << '\n';
  for (const auto& d : report.discrepancies) out << "DISCREPANCY " << d << '\n';
  return report.discrepancies.empty() ? kOk : kFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line graphs of k-uniform hypergraphs and regular hypergraph construction",
               "hyperline"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* lg = app.add_subcommand("linegraph", "line graph of a hypergraph (.hg -> .gr)");
  lg->add_option("--in", o.in, "input .hg file")->required();
  lg->add_option("--out", o.out, "output .gr file (default stdout)");
  lg->callback([&] { action = [&] { return cmd_linegraph(o, out); }; });

  auto* rec = app.add_subcommand("recognize", "decide membership of a graph in L_k^(p)");
  rec->add_option("--in", o.in, "input .gr file")->required();
  rec->add_option("-k", o.k, "uniformity")->required();
  rec->add_option("-p", o.p, "pair multiplicity bound")->required();
  rec->add_flag("--oracle-fallback", o.oracle_fallback,
                "run exhaustive cover search when undecided and n <= 8");
  rec->add_option("--budget", o.budget, "oracle node budget");
  rec->callback([&] { action = [&] { return cmd_recognize(o, out); }; });

  auto* recon = app.add_subcommand("reconstruct", "rebuild a hypergraph from its line graph");
  recon->add_option("--in", o.in, "input .gr file")->required();
  recon->add_option("-k", o.k, "uniformity")->required();
  recon->add_option("-p", o.p, "pair multiplicity bound")->required();
  recon->add_option("--out", o.out, "output .hg file (default stdout)");
  recon->add_option("--cover-out", o.cover_out, "also write the clique cover (.cv)");
  recon->callback([&] { action = [&] { return cmd_reconstruct(o, out); }; });

  auto* bar = app.add_subcommand("baranyai", "partition all k-subsets of [N] into balanced classes");
  bar->add_option("-N", o.n, "ground set size")->required();
  bar->add_option("-k", o.k, "subset size")->required();
  bar->add_option("--out", o.out, "output .bp file (default stdout)");
  bar->callback([&] { action = [&] { return cmd_baranyai(o, out); }; });

  auto* reg = app.add_subcommand("regular", "k-uniform hypergraph on N vertices, all degrees d");
  reg->add_option("-N", o.n, "vertex count")->required();
  reg->add_option("-k", o.k, "edge size")->required();
  reg->add_option("-d", o.d, "common degree")->required();
  reg->add_flag("--strict-simple", o.strict_simple, "refuse to repeat edges");
  reg->add_option("--out", o.out, "output .hg file (default stdout)");
  reg->callback([&] { action = [&] { return cmd_regular(o, out); }; });

  auto* orc = app.add_subcommand("oracle", "brute-force checks for small instances");
  orc->require_subcommand(1);
  auto* cover = orc->add_subcommand("cover", "exhaustive clique-cover search");
  cover->add_option("--in", o.in, "input .gr file")->required();
  cover->add_option("-k", o.k, "uniformity")->required();
  cover->add_option("-p", o.p, "pair multiplicity bound")->required();
  cover->add_option("--budget", o.budget, "search node budget");
  cover->add_option("--size-bound", o.size_bound, "largest vertex count accepted");
  cover->callback([&] { action = [&] { return cmd_oracle_cover(o, out); }; });
  auto* iso = orc->add_subcommand("iso", "graph isomorphism (up to 10 vertices)");
  iso->add_option("first", o.in, "first .gr file")->required();
  iso->add_option("second", o.second, "second .gr file")->required();
  iso->callback([&] { action = [&] { return cmd_oracle_iso(o, out); }; });
  auto* scan = orc->add_subcommand("scan", "check regular realizability for all small (N,k,d)");
  o.n = 8;
  o.k = 6;
  scan->add_option("-N", o.n, "largest N (default 8)");
  scan->add_option("-k", o.k, "largest k (default 6)");
  scan->callback([&] { action = [&] { return cmd_oracle_scan(o, out); }; });

  auto* self = app.add_subcommand("selftest", "run the built-in invariant suite");
  self->callback([&] { action = [&] { return run_selftest(out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kBadInput;
  }

  try {
    return action();
  } catch (const UnrealizableError& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace hyperline::cli
