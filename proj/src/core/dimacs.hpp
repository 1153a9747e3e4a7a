#pragma once

#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace maxpi {

// DIMACS-like edge format: header "p edge <n> <m>", then "e <u> <v>" lines
// with 1-indexed endpoints. Duplicate edges are ignored, self-loops rejected.
// Lines starting with 'c' are comments. Throws Error{parse} with the
// offending line number.
Graph parse_graph(std::string_view text);

std::string format_graph(const Graph& g);

}  // namespace maxpi
