#ifndef AHGEN_GRAPH_HPP
#define AHGEN_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ahgen/vertex_set.hpp"

namespace ahgen {

// Simple undirected graph on vertices 0..n-1. Adjacency is symmetric, no
// loops, no multi-edges. Search code mutates a privately owned copy with
// add_edge/remove_edge; instances shared between threads are treated as
// immutable values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  int max_degree() const;
  VertexSet vertices() const { return VertexSet::first_n(n_); }
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

bool is_connected(const Graph& g);
// Connected components of the subgraph induced by `within`.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);
// Vertices reachable from `seed` inside `within` (seed must be in `within`).
VertexSet reach_within(const Graph& g, int seed, const VertexSet& within);

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// True iff g is k-(vertex-)connected.
bool is_k_connected(const Graph& g, int k);

// True iff some 3-edge-cut splits g into exactly two components each having
// at least two vertices. Connected input required; meant for 3-connected
// graphs, where this is the cyclic-4-edge-connectivity test.
bool has_nontrivial_3_edge_cut(const Graph& g);

// Subgraph induced by `s`, relabeled to 0..|s|-1 in ascending vertex order.
// When `back_map` is given it receives new-label -> old-label.
Graph induced_subgraph(const Graph& g, const VertexSet& s,
                       std::vector<int>* back_map = nullptr);

// True iff the BFS distance between u and v in g is >= d. Used to test that
// adding the edge uv keeps every cycle through it at length >= d + 1.
bool distance_at_least(const Graph& g, int u, int v, int d);

}  // namespace ahgen

#endif
