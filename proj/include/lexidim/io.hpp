#pragma once

#include <string>
#include <string_view>

#include "lexidim/graph.hpp"

namespace lexidim {

enum class GraphFormat { edge_list, graph6, family };

// Throws ParseError (with offset) on malformed text.
Graph parse(std::string_view text, GraphFormat format);

// "<n>; <i>-<j>,<i>-<j>,..." with whitespace allowed anywhere.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Headerless undirected graph6. A leading ">>graph6<<" is accepted and
// skipped; nonzero padding bits are rejected.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// atom := P<n> | C<n> | K<n> | E<n> | K(<m1>,...,<mt>) | wheel(<n>) | fan(<n>)
// expr := atom | comp(expr) | join(expr,expr) | lex(expr,expr)
Graph parse_family(std::string_view text);

}  // namespace lexidim
