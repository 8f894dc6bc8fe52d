#pragma once

#include <string>
#include <string_view>

#include "bcx/graph.hpp"

namespace bcx {

/// Edge-list text: one "u v" per line, a lone "v" declares a vertex.
/// Blank lines and '#' comments are ignored. Throws ParseError.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: every edge, then every isolated vertex.
std::string format_edge_list(const Graph& g);

}  // namespace bcx
