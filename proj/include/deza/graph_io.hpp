#ifndef DEZA_GRAPH_IO_HPP
#define DEZA_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "deza/graph.hpp"

namespace deza {

/// graph6 encoding. Orders up to 62 use the one-byte header; larger orders
/// (up to Graph::kMaxOrder) use the 126-prefixed four-byte header.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and trailing whitespace. Throws
/// DomainError("malformed-graph6", ...) on bad input.
Graph from_graph6(std::string_view text);

/// Edge-list text: "n m" on the first line, then m lines "u v".
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace deza

#endif  // DEZA_GRAPH_IO_HPP
