#pragma once

#include <string>

#include "circis/circulant.hpp"
#include "circis/simple_graph.hpp"

namespace circis {

// Circulant text form "n:d1,d2,..." (full ascending distance list, "n:" when
// empty). Throws ParseError / the make_circulant validation errors.
std::string format_circulant(const Circulant& g);
Circulant parse_circulant(const std::string& text);

// graph6, including the 3-byte extended order form for n >= 63.
std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(const std::string& text);

// Plain edge list: first line "n m", then m lines "u v".
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph from_edge_list(const std::string& text);

}  // namespace circis
