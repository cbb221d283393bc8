#include "ahgen/named_graphs.hpp"

#include <stdexcept>

namespace ahgen {

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k == n) throw std::invalid_argument("bad GP(n, k) parameters");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + k) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

Graph herschel() {
  return Graph::from_edges(11, {{0, 2},
                                {0, 3},
                                {0, 4},
                                {1, 2},
                                {1, 3},
                                {1, 5},
                                {2, 6},
                                {2, 7},
                                {3, 8},
                                {3, 9},
                                {4, 6},
                                {4, 8},
                                {5, 7},
                                {5, 9},
                                {6, 10},
                                {7, 10},
                                {8, 10},
                                {9, 10}});
}

}  // namespace ahgen
