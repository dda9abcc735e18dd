#pragma once

#include <iosfwd>
#include <string>

#include "hyperline/baranyai.hpp"
#include "hyperline/clique_cover.hpp"
#include "hyperline/graph.hpp"
#include "hyperline/hypergraph.hpp"

// Line-oriented ASCII formats. In every format '#' starts a comment that runs
// to the end of the line, and blank lines are ignored. Readers throw
// InputError with the offending line number.
//
//   .hg  "H <n> <m>"        then m lines, the sorted vertices of one edge
//   .gr  "G <n> <edges>"    then one "u v" line per edge, u < v, lexicographic
//   .bp  "B <N> <k> <M>"    then M blocks "S <i> <count>" + count k-set lines
//   .cv  "C <n> <r>"        then r lines, the sorted vertices of one entry
namespace hyperline::io {

void write_hypergraph(std::ostream& os, const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& is);

void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

// Classes are numbered from 1, elements are 1..N.
void write_partition(std::ostream& os, const BaranyaiPartition& partition);
BaranyaiPartition read_partition(std::istream& is);

void write_cover(std::ostream& os, const CliqueCover& cover);
CliqueCover read_cover(std::istream& is);

// File helpers; throw InputError when the file cannot be opened.
Hypergraph load_hypergraph(const std::string& path);
Graph load_graph(const std::string& path);
BaranyaiPartition load_partition(const std::string& path);
CliqueCover load_cover(const std::string& path);

}  // namespace hyperline::io
