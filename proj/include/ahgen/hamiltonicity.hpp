#ifndef AHGEN_HAMILTONICITY_HPP
#define AHGEN_HAMILTONICITY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ahgen/graph.hpp"

namespace ahgen {

// Cycle through every vertex of g, as a vertex sequence (closing edge from
// back to front implied). Disconnected input simply yields nullopt.
std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g);

// Same, but spanning only the vertices in `active` (labels of g).
std::optional<std::vector<int>> find_hamiltonian_cycle_within(const Graph& g,
                                                              const VertexSet& active);

bool is_hamiltonian(const Graph& g);
bool is_hamiltonian_within(const Graph& g, const VertexSet& active);

// Spanning path with end-vertices u and v. u == v is rejected.
std::optional<std::vector<int>> find_hamiltonian_path(const Graph& g, int u, int v);
std::optional<std::vector<int>> find_hamiltonian_path_within(const Graph& g,
                                                             const VertexSet& active,
                                                             int u, int v);

// Two vertex-disjoint paths that together span g, with end-vertex sets
// {a, b} and {c, d}. The four vertices must be pairwise distinct.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_two_spanning_paths(
    const Graph& g, std::pair<int, int> ab, std::pair<int, int> cd);

enum class Verdict {
  Hamiltonian,
  Hypohamiltonian,
  AlmostHypohamiltonian,
  KHypohamiltonian,
  Other,
};

struct Classification {
  Verdict verdict = Verdict::Other;
  // True iff G - v is hamiltonian for every vertex v (the graph itself may or
  // may not be hamiltonian).
  bool hypocyclic = false;
  std::optional<int> exceptional_vertex;  // present iff AlmostHypohamiltonian
  VertexSet bad_set;  // vertices whose deletion is non-hamiltonian (KHypohamiltonian)
  // Deleted vertex -> hamiltonian cycle of the reduced graph (opt-in).
  std::map<int, std::vector<int>> witnesses;
};

struct ClassifyOptions {
  bool retain_witnesses = false;
  // By default the vertex-deletion scan stops once two non-hamiltonian
  // deletions and one hamiltonian deletion are known; the full bad set is
  // computed only on request.
  bool full_bad_set = false;
};

// Full taxonomy of a connected graph with n >= 3. Deletion tests run in
// ascending vertex order.
Classification classify(const Graph& g, const ClassifyOptions& options = {});

// Exceptional vertex w if g is almost hypohamiltonian, nullopt otherwise.
std::optional<int> is_almost_hypohamiltonian(const Graph& g);

const char* verdict_name(Verdict v);

}  // namespace ahgen

#endif
