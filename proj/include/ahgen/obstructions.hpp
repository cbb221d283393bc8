#ifndef AHGEN_OBSTRUCTIONS_HPP
#define AHGEN_OBSTRUCTIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ahgen/graph.hpp"

namespace ahgen {

// Minimum number of vertex-disjoint paths covering all vertices. Cheap when
// the graph already is a disjoint union of paths (the generator only calls it
// there); otherwise solved exactly by subset DP, which caps the order.
int path_cover_number(const Graph& g);

// The recursive lower bound k(G) <= p(G): 0 for the empty graph;
// max{1, ceil(|V1|/2)} when there is no isolated vertex or edge; otherwise
// |I(G)| + k(G - I(G)) with I(G) the isolated vertices and edges.
int k_lower_bound(const Graph& g);

enum class ObstructionKind { A, B, C };

// A certificate that the graph cannot extend to an almost hypocyclic graph
// without specific edge additions. (W, X) partitions the vertices with
// |W| > 1 and |X| > 1:
//   A: G[W] is a disjoint union of paths and p(G[W]) >= |X|
//   B: k(G[W]) >= |X|
//   C: W independent, v in X, and 2*n2 + n1 < 2|W| where n1/n2 count the
//      vertices of X - v with exactly one / more than one neighbour in W
struct Obstruction {
  ObstructionKind kind;
  VertexSet W;
  VertexSet X;
  std::optional<int> v;  // kind C only
  int n1 = 0, n2 = 0;    // kind C only
};

// Re-checks an obstruction against its definition from scratch.
bool validate_obstruction(const Graph& g, const Obstruction& ob);

// Heuristic finders: a returned witness is always validated; nullopt means
// nothing was found, never that no obstruction exists. Obstruction candidates
// are grown greedily from low-degree seed vertices, at most `candidate_cap`
// of them, and the candidate minimizing the number of good edges (the
// branching factor) wins.
std::optional<Obstruction> find_type_A(const Graph& g, int candidate_cap = 50);
std::optional<Obstruction> find_type_B(const Graph& g, int candidate_cap = 50);
std::optional<Obstruction> find_type_C(const Graph& g, int candidate_cap = 50);

// The non-edges whose addition can destroy the obstruction, sorted, no
// duplicates. A stale obstruction (invariants no longer holding for g) is
// rejected.
std::vector<std::pair<int, int>> good_edges(const Graph& g, const Obstruction& ob);

}  // namespace ahgen

#endif
