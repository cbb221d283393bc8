#ifndef AHGEN_CANONICAL_HPP
#define AHGEN_CANONICAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ahgen/graph.hpp"

namespace ahgen {

// Relabeling-invariant byte string: two graphs have equal keys iff they are
// isomorphic. The bytes are the graph6 encoding of the canonical form, so a
// key doubles as a loadable representative.
struct CanonicalKey {
  std::string bytes;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes < b.bytes;
  }
};

// Canonical labeling (old label -> new label) computed by backtracking over
// equitable partition refinements, with discovered automorphisms pruning the
// search tree.
std::vector<int> canonical_labeling(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& labeling);

CanonicalKey canonical_key(const Graph& g);

}  // namespace ahgen

template <>
struct std::hash<ahgen::CanonicalKey> {
  std::size_t operator()(const ahgen::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};

#endif
