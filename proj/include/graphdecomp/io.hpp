#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "graphdecomp/graph.hpp"

namespace graphdecomp::io {

// Edge-list text: one `u v` pair per line (whitespace separated labels), a
// bare label declares an isolated vertex, `#` starts a comment, duplicates
// collapse. Labels are interned in first-appearance order.
Digraph parse_edge_list_digraph(std::string_view text);
UndirectedGraph parse_edge_list_undirected(std::string_view text);

std::string to_edge_list(const Digraph& g);
std::string to_edge_list(const UndirectedGraph& g);

// DOT subset: `digraph NAME? { a -> b; c; ... }` or `graph NAME? { a -- b; }`.
// Attribute blocks in [ ] are ignored; the header decides directedness and
// must agree with the arrow kind used.
std::variant<Digraph, UndirectedGraph> parse_dot(std::string_view text);

}  // namespace graphdecomp::io
