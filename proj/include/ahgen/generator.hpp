#ifndef AHGEN_GENERATOR_HPP
#define AHGEN_GENERATOR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ahgen/canonical.hpp"
#include "ahgen/graph.hpp"

namespace ahgen {

struct GenConfig {
  int n = 0;
  int min_girth = 3;
  bool planar_only = false;
  // Post-filter: deliver only graphs whose exceptional vertex is cubic. The
  // report still counts everything found.
  bool require_cubic_exceptional = false;
  std::optional<std::uint64_t> max_results;
  int thread_count = 1;
  // Resource caps; hitting one aborts the run and is reported distinctly
  // from completion.
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
  int obstruction_cap = 50;
};

struct FoundGraph {
  Graph graph;
  int exceptional_vertex = -1;
  CanonicalKey key;
};

struct RunReport {
  int n = 0;
  int min_girth = 3;
  bool planar_only = false;
  std::uint64_t nodes_visited = 0;
  std::uint64_t dedup_hits = 0;          // visits short-circuited by the key store
  std::uint64_t hamiltonian_pruned = 0;  // visits discarded as hamiltonian
  std::uint64_t graphs_found = 0;       // isomorphism classes
  std::uint64_t cubic_exceptional = 0;  // of which the exceptional vertex is cubic
  bool completed = true;
  std::string abort_reason;
  double wall_seconds = 0.0;
  // How often each branch of the construction cascade fired.
  struct BranchStats {
    std::uint64_t type_a = 0;
    std::uint64_t degree_two = 0;
    std::uint64_t type_c = 0;
    std::uint64_t cubic_triangle = 0;
    std::uint64_t type_b = 0;
    std::uint64_t exhaustive = 0;  // no obstruction: output test plus full expansion
  } branches;
  struct PerDegree {
    int degree = 0;
    std::uint64_t seeds = 0;
    std::uint64_t nodes = 0;
    std::uint64_t found = 0;  // first-time discoveries while in this regime
  };
  std::vector<PerDegree> per_degree;
};

// Seed graphs of Algorithm 1: the (n-1)-cycle plus a hub joined to `degree`
// cycle vertices, one representative per orbit of degree-subsets under the
// dihedral symmetry of the cycle. Requires 3 <= degree <= n-1.
std::vector<Graph> seed_graphs(int n, int degree);

// Exhaustive generation of all almost hypohamiltonian graphs of order cfg.n
// meeting the girth/planarity constraints, one representative per
// isomorphism class. Results are delivered to the sink after the search
// finishes, sorted by canonical key, so single- and multi-threaded runs emit
// identical streams.
RunReport generate(const GenConfig& cfg, const std::function<void(const FoundGraph&)>& sink);

// All connected cubic graphs of order n (even, at most 20) and girth at
// least min_girth, one per isomorphism class, streamed in discovery order.
void brute_cubic_graphs(int n, int min_girth, const std::function<void(const Graph&)>& sink);

}  // namespace ahgen

#endif
