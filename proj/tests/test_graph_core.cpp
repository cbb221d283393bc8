#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "ahgen/canonical.hpp"
#include "ahgen/graph.hpp"
#include "ahgen/graph6.hpp"
#include "ahgen/named_graphs.hpp"
#include "support/oracles.hpp"

using namespace ahgen;

TEST_CASE("graph basics") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
  g.remove_edge(0, 1);
  CHECK(!g.has_edge(0, 1));
  CHECK_THROWS_AS(g.remove_edge(0, 1), std::invalid_argument);
}

TEST_CASE("graph6 frozen values") {
  // Values pinned against the reference codec in tests/support.
  CHECK(write_graph6(complete_bipartite(1, 1)) == "A_");
  CHECK(write_graph6(Graph(5)) == "D??");
  CHECK(parse_graph6("A_") == complete_bipartite(1, 1));
  CHECK(parse_graph6("D??") == Graph(5));
  CHECK(parse_graph6(">>graph6<<A_") == complete_bipartite(1, 1));

  CHECK(oracles::reference_graph6_encode(complete_bipartite(1, 1)) == "A_");
  CHECK(oracles::reference_graph6_encode(Graph(5)) == "D??");
}

TEST_CASE("graph6 agrees with the reference codec on random graphs") {
  std::mt19937 rng(20240917);
  for (int it = 0; it < 1000; ++it) {
    int n = 1 + static_cast<int>(rng() % 20);
    Graph g = oracles::random_graph(rng, n, 0.4);
    std::string mine = write_graph6(g);
    CHECK(mine == oracles::reference_graph6_encode(g));
    CHECK(parse_graph6(mine) == g);
    CHECK(oracles::reference_graph6_decode(mine) == g);
  }
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("D?"), Graph6Error);     // truncated body
  CHECK_THROWS_AS(parse_graph6("D???"), Graph6Error);   // oversized body
  CHECK_THROWS_AS(parse_graph6("A\x1f"), Graph6Error);  // character out of range
  CHECK_THROWS_AS(parse_graph6("A\x7f"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("~?"), Graph6Error);  // truncated length prefix
  // n = 2 has one payload bit; the five padding bits must be zero.
  CHECK_THROWS_AS(parse_graph6("A~"), Graph6Error);
  CHECK(parse_graph6("A?") == Graph(2));
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(4)) == 4);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(petersen()) == oracles::brute_girth(petersen()));
  CHECK(!girth(path_graph(6)).has_value());
  CHECK(!girth(Graph(3)).has_value());
  CHECK(girth(complete_graph(4)) == 3);

  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    Graph g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 11), 0.3);
    CHECK(girth(g) == oracles::brute_girth(g));
  }
}

TEST_CASE("vertex connectivity") {
  CHECK(is_k_connected(cycle_graph(5), 2));
  CHECK(!is_k_connected(cycle_graph(5), 3));
  CHECK(is_k_connected(petersen(), 3));
  CHECK(!is_k_connected(petersen(), 4));
  CHECK(is_k_connected(complete_graph(4), 3));
  CHECK(!is_k_connected(complete_graph(4), 4));  // K_n is (n-1)-connected

  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    Graph g = oracles::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.45);
    for (int k = 1; k <= 3; ++k) CHECK(is_k_connected(g, k) == oracles::brute_k_connected(g, k));
  }
}

TEST_CASE("nontrivial 3-edge-cuts") {
  // Two 4-cycles joined by three edges: cutting the bridge edges leaves two
  // components of four vertices each.
  Graph joined(8);
  for (int i = 0; i < 4; ++i) {
    joined.add_edge(i, (i + 1) % 4);
    joined.add_edge(4 + i, 4 + (i + 1) % 4);
  }
  joined.add_edge(0, 4);
  joined.add_edge(1, 5);
  joined.add_edge(2, 6);
  CHECK(has_nontrivial_3_edge_cut(joined));
  CHECK(!has_nontrivial_3_edge_cut(petersen()));
  CHECK(!has_nontrivial_3_edge_cut(complete_graph(4)));
  CHECK_THROWS_AS(has_nontrivial_3_edge_cut(Graph(4)), std::invalid_argument);
}

TEST_CASE("canonical key: relabeling invariance") {
  std::mt19937 rng(23);
  Graph c5 = cycle_graph(5);
  auto base = canonical_key(c5);
  std::vector<int> perm{0, 1, 2, 3, 4};
  do {
    CHECK(canonical_key(relabel(c5, perm)) == base);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Distinct keys for non-isomorphic graphs of equal order and size.
  Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(canonical_key(cycle_graph(6)) != canonical_key(two_triangles));

  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng() % 29);
    Graph g = oracles::random_graph(rng, n, 0.25);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(canonical_key(relabel(g, p)) == canonical_key(g));
  }
}

TEST_CASE("canonical key matches brute-force isomorphism on all graphs, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    int pairs = n * (n - 1) / 2;
    std::map<std::string, Graph> reps;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (mask & (1 << bit)) g.add_edge(u, v);
      auto key = canonical_key(g).bytes;
      auto [it, fresh] = reps.emplace(key, g);
      if (!fresh) CHECK(oracles::brute_isomorphic(it->second, g));
    }
    // Distinct keys must mean non-isomorphic representatives.
    std::vector<const Graph*> all;
    for (auto& [k, g] : reps) all.push_back(&g);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        CHECK(!oracles::brute_isomorphic(*all[i], *all[j]));
  }
}

TEST_CASE("canonical key round-trips through graph6") {
  auto key = canonical_key(petersen());
  Graph rep = parse_graph6(key.bytes);
  CHECK(oracles::brute_isomorphic(rep, petersen()));
}
