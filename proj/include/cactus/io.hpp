#ifndef CACTUS_IO_HPP
#define CACTUS_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "cactus/graph.hpp"

namespace cactus {

// Standard graph6 payload (bit-packed upper triangle, n <= 62).
// Round-trips byte-exactly on normalized graphs.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Plain edge-list text: first line "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
std::string emit_edge_list(const Graph& g);

} // namespace cactus

#endif // CACTUS_IO_HPP
