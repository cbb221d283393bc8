#ifndef AHGEN_NAMED_GRAPHS_HPP
#define AHGEN_NAMED_GRAPHS_HPP

#include "ahgen/graph.hpp"

namespace ahgen {

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

// Outer n-cycle 0..n-1, inner star polygon {n/k} on n..2n-1, spokes i -- n+i.
Graph generalized_petersen(int n, int k);

inline Graph petersen() { return generalized_petersen(5, 2); }
inline Graph cube_q3() { return generalized_petersen(4, 1); }
inline Graph dodecahedron() { return generalized_petersen(10, 2); }

// Smallest non-hamiltonian polyhedral graph: 11 vertices, 18 edges, bipartite,
// all nine faces quadrilaterals.
Graph herschel();

}  // namespace ahgen

#endif
