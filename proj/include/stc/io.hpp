#pragma once

#include "stc/graph.hpp"
#include "stc/incompat.hpp"
#include "stc/solvers.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace stc {

/// Edge-list text: one "u v" pair per line, "#" comment lines, and
/// "vertex u" lines declaring (possibly isolated) vertices. Tokens are
/// whitespace separated. Self-loops, duplicate edges and malformed lines
/// raise input_error naming the line.
Graph parse_edge_list(std::istream &in, const std::string &source = "<input>");
Graph read_edge_list(const std::string &path);

/// Edge-list text for g: comment lines first, then a "vertex" line for every
/// isolated vertex, then the edges in lexicographic order.
std::string format_edge_list(const Graph &g, const std::vector<std::string> &comments = {});

/// JSON result document with keys value, solver, strong, weak and stats.
/// Pairs are label-sorted and lists lexicographic.
std::string format_result(const Graph &g, const SolveResult &res);

/// Reads the strong/weak lists of a result document as a labeling of g.
/// Raises input_error on malformed JSON or labels outside g.
StrongWeakLabeling parse_labeling(const Graph &g, std::istream &in);

/// The line-incompatibility graph as a graph on nodes named "u-v".
Graph incompat_as_graph(const Graph &g);

} // namespace stc
