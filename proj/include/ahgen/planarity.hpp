#ifndef AHGEN_PLANARITY_HPP
#define AHGEN_PLANARITY_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "ahgen/graph.hpp"

namespace ahgen {

struct NonPlanarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Combinatorial plane embedding: a rotation system plus the facial walks it
// induces. Euler's relation n - m + f = 2 is asserted on construction; every
// edge lies on exactly two facial walks (twice on one walk for bridges).
struct PlaneEmbedding {
  std::vector<std::vector<int>> rotation;  // cyclic neighbour order per vertex
  std::vector<std::vector<int>> faces;     // closed facial walks
  std::map<int, int> face_degrees;         // walk length -> number of faces

  int vertex_count() const { return static_cast<int>(rotation.size()); }
  int edge_count() const;
};

bool is_planar(const Graph& g);

// Embedding of a planar connected graph (path-addition construction per
// biconnected block, merged at cut vertices). Non-planar input is refused.
PlaneEmbedding embed(const Graph& g);

// Checks Grinberg's identity sum (i-2)(f_i - f'_i) = 0 for a hamiltonian
// cycle of the embedded graph, classifying every face to one side of the
// cycle. Returns true for every correct input; false would expose a bug in
// the caller or in the embedding.
bool grinberg_verify(const PlaneEmbedding& emb, const std::vector<int>& cycle);

struct GrinbergCertificate {
  enum class Outcome { NonHamiltonian, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  // For Inconclusive: one feasible assignment of inside-face counts per size.
  std::map<int, int> inside_counts;
};

// Feasibility of Grinberg's identity over the face-size multiset alone.
// NonHamiltonian is a proof; Inconclusive is not a hamiltonicity claim.
GrinbergCertificate grinberg_certify_nonhamiltonian(const PlaneEmbedding& emb);

}  // namespace ahgen

#endif
