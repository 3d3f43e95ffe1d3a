#pragma once

#include <iosfwd>

#include "kout/graph.hpp"

namespace kout {

// Edge-list text format: a header line "n m", then m lines "u v" with
// 1 <= u < v <= n, one edge per line in ascending order, '\n' terminated.

void write_graph(std::ostream& out, const Graph& g);

/// Parses the edge-list format; throws ParseError with the offending line.
Graph read_graph(std::istream& in);

} // namespace kout
