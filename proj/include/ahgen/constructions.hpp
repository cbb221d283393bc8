#ifndef AHGEN_CONSTRUCTIONS_HPP
#define AHGEN_CONSTRUCTIONS_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ahgen/graph.hpp"

namespace ahgen {

// Dot product H . H': delete the independent edges ab, cd from H and the
// adjacent vertices x, y from H', then join a,b to the former neighbours of x
// and c,d to those of y. The two free labelling choices per side are the
// `wiring` bits: bit 0 swaps which neighbour of x is joined to a, bit 1 swaps
// the y side. Vertices of H keep their labels; the rest of H' follows in
// ascending order. The result can be disconnected; callers who care check.
Graph dot_product(const Graph& h, std::pair<int, int> ab, std::pair<int, int> cd,
                  const Graph& hp, std::pair<int, int> xy, int wiring);

// All four wirings, in order 0..3.
std::vector<Graph> dot_product_all_wirings(const Graph& h, std::pair<int, int> ab,
                                           std::pair<int, int> cd, const Graph& hp,
                                           std::pair<int, int> xy);

struct SuitabilityReport {
  std::pair<int, int> ab, cd;
  bool good_ac = false, good_ad = false, good_bc = false, good_bd = false;
  bool good_double = false;
  // For each vertex t of H: is (a,b) good, is (c,d) good in H - {t, ab, cd}.
  std::vector<std::array<bool, 2>> per_vertex;
  // Do ab and cd lie on a common facial cycle? Evaluated only for planar H.
  std::optional<bool> same_face;
  bool suitable = false;
};

// Checks every hypothesis the dot product theorem places on the edge pair:
// (a,c), (a,d), (b,c), (b,d) and ((a,b),(c,d)) good in H - {ab, cd}, and for
// each vertex t at least one of (a,b), (c,d) good in H - {t, ab, cd}.
SuitabilityReport check_suitable_pair(const Graph& h, std::pair<int, int> ab,
                                      std::pair<int, int> cd);

// Quadrilateral expansion Th: delete the opposite edges v1v2 and v3v4 of the
// 4-cycle v1v2v3v4, add a new 4-cycle v1'v2'v3'v4' and the spokes vi-vi'.
Graph th_expand(const Graph& g, const std::array<int, 4>& quad);

// Vertex identification G_x H_y: delete the cubic vertices x and y and
// identify their neighbourhoods via the given bijection (the i-th neighbour
// of x in ascending order merges with matching[i], a neighbour of y).
Graph vertex_identify(const Graph& g, int x, const Graph& h, int y,
                      const std::array<int, 3>& matching);

}  // namespace ahgen

#endif
