#pragma once

#include <istream>
#include <string>
#include <vector>

#include "cotan/graph.hpp"

namespace cotan {

// Edge-list text: one "u v" per line ("u u" is a loop), '#' starts a
// comment, blank lines are ignored.  Vertex tokens match [A-Za-z0-9_']+.
// Malformed lines raise ParseError naming `source` and the line number.
Graph parse_edge_list(std::istream& in, const std::string& source = "<input>");
Graph parse_edge_list_string(const std::string& text);

// Several edge lists in one stream, separated by lines consisting of "---".
std::vector<Graph> parse_graph_stream(std::istream& in, const std::string& source = "<input>");

// Poset text: "p < q" relation lines (any relations; the closure is taken)
// and single-token lines declaring an element.
Poset parse_poset(std::istream& in, const std::string& source = "<input>");

Graph read_graph_file(const std::string& path);
Poset read_poset_file(const std::string& path);

// "cycle:5", "path:4", "complete:3", "star:3", "letterplace2:<posetfile>",
// "letterplace2:chain:3", "letterplace2:antichain:2".
Graph parse_family(const std::string& spec);

// Accepts the forms above plus integer ranges, e.g. "cycle:3..12".
std::vector<Graph> parse_family_range(const std::string& spec);
// The single specs a range stands for, in order.
std::vector<std::string> expand_family_range(const std::string& spec);

}  // namespace cotan
