#ifndef AHGEN_GRAPH6_HPP
#define AHGEN_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ahgen/graph.hpp"

namespace ahgen {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// McKay's graph6 line format: 6-bit big-endian packing of the upper triangle
// in column order, characters offset by 63. The optional ">>graph6<<" header
// is accepted on input and never produced on output.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace ahgen

#endif
