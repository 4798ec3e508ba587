#pragma once

#include <string>

#include "graph.hpp"

namespace ivfg {

// Parses the line-oriented graph format:
//
//   graph <name>
//   vertex <id> <mu_lo> <mu_hi>
//   edge <id1> <id2> <mu_lo> <mu_hi>
//
// Numbers are plain decimals or p/q rationals, read exactly. '#' starts a
// comment. Vertices must be declared before any edge uses them. Throws
// ParseError for syntax problems (with line and column) and ValidationError
// for well-formed documents describing invalid graphs.
Graph parse_graph(const std::string& text);

// Canonical document: header, vertices in lexicographic order, then edges in
// lexicographic order of their canonical endpoint pairs. parse_graph of the
// result reproduces the graph exactly.
std::string serialize_graph(const Graph& g);

} // namespace ivfg
