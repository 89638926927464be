#ifndef QSPEC_GRAPH6_HPP
#define QSPEC_GRAPH6_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "qspec/graph.hpp"

namespace qspec {

// graph6 ASCII encoding (the de facto standard: 6-bit chunks biased by 63,
// upper triangle read column by column). Orders up to 64 use the short or
// long size header as the format requires.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);  // throws std::invalid_argument

// Edge-list text: header line "n <edge count>", then one "u v" per line.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);  // throws std::invalid_argument

}  // namespace qspec

#endif
