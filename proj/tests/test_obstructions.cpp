#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ahgen/graph.hpp"
#include "ahgen/hamiltonicity.hpp"
#include "ahgen/named_graphs.hpp"
#include "ahgen/obstructions.hpp"
#include "support/oracles.hpp"

using namespace ahgen;

namespace {

// Exhaustive obstruction scan over all (W, X) partitions: test-only oracle,
// n <= 10.
bool exhaustive_has_type_A(const Graph& g) {
  int n = g.vertex_count();
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    VertexSet w;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) w.insert(v);
    int ws = w.size();
    if (ws <= 1 || n - ws <= 1) continue;
    Graph sub = induced_subgraph(g, w);
    bool paths = true;
    for (int v = 0; v < sub.vertex_count() && paths; ++v)
      if (sub.degree(v) > 2) paths = false;
    if (!paths) continue;
    auto comps = components_within(sub, sub.vertices());
    if (sub.edge_count() != sub.vertex_count() - static_cast<int>(comps.size()))
      continue;  // a cycle component
    if (path_cover_number(sub) >= n - ws) return true;
  }
  return false;
}

bool exhaustive_has_type_B(const Graph& g) {
  int n = g.vertex_count();
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    VertexSet w;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) w.insert(v);
    int ws = w.size();
    if (ws <= 1 || n - ws <= 1) continue;
    if (k_lower_bound(induced_subgraph(g, w)) >= n - ws) return true;
  }
  return false;
}

bool exhaustive_has_type_C(const Graph& g) {
  int n = g.vertex_count();
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    VertexSet w;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) w.insert(v);
    int ws = w.size();
    if (ws <= 1 || n - ws <= 1) continue;
    bool independent = true;
    for (int u = w.first(); u >= 0 && independent; u = w.next(u))
      if (g.neighbors(u).intersects(w)) independent = false;
    if (!independent) continue;
    for (int v = 0; v < n; ++v) {
      if (w.contains(v)) continue;
      int n1 = 0, n2 = 0;
      for (int x = 0; x < n; ++x) {
        if (w.contains(x) || x == v) continue;
        int c = g.neighbors(x).intersection_size(w);
        if (c == 1) ++n1;
        if (c >= 2) ++n2;
      }
      if (2 * n2 + n1 < 2 * ws) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("path cover numbers") {
  // Three disjoint paths.
  Graph three = Graph::from_edges(7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}});
  CHECK(path_cover_number(three) == 3);
  CHECK(path_cover_number(cycle_graph(5)) == 1);
  Graph mixed = Graph::from_edges(5, {{2, 3}, {3, 4}});  // K1 + K1 + P3
  CHECK(path_cover_number(mixed) == 3);
  CHECK(path_cover_number(Graph(0)) == 0);
  CHECK(path_cover_number(petersen()) == 1);

  std::mt19937 rng(5);
  for (int it = 0; it < 300; ++it) {
    Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.3);
    CHECK(path_cover_number(g) == oracles::brute_path_cover(g));
  }
}

TEST_CASE("k lower bound") {
  CHECK(k_lower_bound(Graph(0)) == 0);
  CHECK(k_lower_bound(path_graph(4)) == 1);  // |V1| = 2
  Graph k1p3 = Graph::from_edges(4, {{1, 2}, {2, 3}});
  CHECK(k_lower_bound(k1p3) == 2);  // one isolated vertex + P3
  CHECK(k_lower_bound(Graph(4)) == 4);
  CHECK(k_lower_bound(cycle_graph(5)) == 1);

  // k(G) <= p(G) on everything small.
  std::mt19937 rng(6);
  for (int it = 0; it < 500; ++it) {
    Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.25);
    CHECK(k_lower_bound(g) <= path_cover_number(g));
  }
}

TEST_CASE("type A on K2,4") {
  Graph g = complete_bipartite(2, 4);
  // The textbook witness: W = the 4-side (four isolated vertices), X = the
  // 2-side, p = 4 >= 2, good edges = all six non-edges inside the 4-side.
  Obstruction four_side{ObstructionKind::A, {}, {}, std::nullopt, 0, 0};
  for (int v = 2; v < 6; ++v) four_side.W.insert(v);
  four_side.X.insert(0);
  four_side.X.insert(1);
  CHECK(validate_obstruction(g, four_side));
  auto all_inside = good_edges(g, four_side);
  CHECK(all_inside.size() == 6);

  // The finder may return any valid witness; it prefers a tighter one with
  // fewer good edges.
  auto ob = find_type_A(g);
  REQUIRE(ob.has_value());
  CHECK(ob->kind == ObstructionKind::A);
  CHECK(validate_obstruction(g, *ob));
  auto edges = good_edges(g, *ob);
  CHECK(!edges.empty());
  CHECK(edges.size() <= 6);
  for (auto [u, v] : edges) {
    CHECK(ob->W.contains(u));
    CHECK(ob->W.contains(v));
  }
}

TEST_CASE("type B on K2,4 and the star precondition") {
  Graph g = complete_bipartite(2, 4);
  // The textbook witness: W = the 4-side, k = 4 isolated vertices >= 2 = |X|.
  Obstruction four_side{ObstructionKind::B, {}, {}, std::nullopt, 0, 0};
  for (int v = 2; v < 6; ++v) four_side.W.insert(v);
  four_side.X.insert(0);
  four_side.X.insert(1);
  CHECK(validate_obstruction(g, four_side));
  auto ob = find_type_B(g);
  REQUIRE(ob.has_value());
  CHECK(validate_obstruction(g, *ob));

  // In K1,4 the all-leaves candidate has |X| = 1 and must never be reported;
  // any witness the finder does return has to carry |X| > 1.
  Graph star = complete_bipartite(1, 4);
  Obstruction all_leaves{ObstructionKind::B, {}, {}, std::nullopt, 0, 0};
  for (int v = 1; v < 5; ++v) all_leaves.W.insert(v);
  all_leaves.X.insert(0);
  CHECK(!validate_obstruction(star, all_leaves));
  auto sb = find_type_B(star);
  if (sb) {
    CHECK(validate_obstruction(star, *sb));
    CHECK(sb->X.size() > 1);
  }
}

TEST_CASE("type C on K2,4 and C6") {
  Graph g = complete_bipartite(2, 4);
  // The textbook witness: W = the 4-side, v one of the 2-side vertices, so
  // the other 2-side vertex is the only supplier: n2 = 1, n1 = 0, 2 < 8.
  Obstruction four_side{ObstructionKind::C, {}, {}, 0, 0, 1};
  for (int v = 2; v < 6; ++v) four_side.W.insert(v);
  four_side.X.insert(0);
  four_side.X.insert(1);
  CHECK(validate_obstruction(g, four_side));
  CHECK(good_edges(g, four_side).size() == 6);

  auto ob = find_type_C(g);
  REQUIRE(ob.has_value());
  CHECK(ob->kind == ObstructionKind::C);
  CHECK(validate_obstruction(g, *ob));

  // C6 with W = alternate vertices: n2 = 2, n1 = 0 for every v, and
  // 2*2 + 0 >= 2*3 fails to be violated... it is violated: 4 < 6. Check the
  // oracle rather than guessing.
  CHECK(exhaustive_has_type_C(cycle_graph(6)) == find_type_C(cycle_graph(6)).has_value());

  CHECK(!exhaustive_has_type_A(petersen()));
  CHECK(!exhaustive_has_type_B(petersen()));
  CHECK(!exhaustive_has_type_C(petersen()));
  CHECK(!find_type_A(petersen()).has_value());
  CHECK(!find_type_B(petersen()).has_value());
  CHECK(!find_type_C(petersen()).has_value());
}

TEST_CASE("good C-edges in K2,4") {
  Graph g = complete_bipartite(2, 4);
  // For the 4-side witness, clause (i) gives all pairs inside W and clause
  // (ii) nothing: the X - v vertex has 4 > 1 neighbours in W.
  Obstruction four_side{ObstructionKind::C, {}, {}, 0, 0, 1};
  for (int v = 2; v < 6; ++v) four_side.W.insert(v);
  four_side.X.insert(0);
  four_side.X.insert(1);
  auto edges = good_edges(g, four_side);
  CHECK(edges.size() == 6);
  for (auto [u, v] : edges) {
    CHECK(four_side.W.contains(u));
    CHECK(four_side.W.contains(v));
  }

  // Whatever the finder returns must re-validate and branch somewhere.
  auto ob = find_type_C(g);
  REQUIRE(ob.has_value());
  CHECK(!good_edges(g, *ob).empty());
}

TEST_CASE("stale obstruction rejected") {
  Graph g = complete_bipartite(2, 4);
  auto ob = find_type_A(g);
  REQUIRE(ob.has_value());
  Graph changed = g;
  int u = ob->W.first();
  int v = ob->W.next(u);
  changed.add_edge(u, v);
  // After enough additions inside W the witness stops being valid.
  Graph changed2 = changed;
  int w2 = ob->W.next(v);
  changed2.add_edge(u, w2);
  changed2.add_edge(v, w2);
  CHECK(!validate_obstruction(changed2, *ob));
  CHECK_THROWS_AS(good_edges(changed2, *ob), std::invalid_argument);
}

TEST_CASE("good edges weaken the witness") {
  std::mt19937 rng(9);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    Graph g = oracles::random_graph(rng, 5 + static_cast<int>(rng() % 6), 0.3);
    for (auto finder : {find_type_A, find_type_B, find_type_C}) {
      auto ob = finder(g, 50);
      if (!ob) continue;
      REQUIRE(validate_obstruction(g, *ob));
      for (auto [u, v] : good_edges(g, *ob)) {
        Graph h = g;
        h.add_edge(u, v);
        ++checked;
        switch (ob->kind) {
          case ObstructionKind::A: {
            // Either the path structure is destroyed or p strictly drops.
            Graph sub = induced_subgraph(h, ob->W);
            bool still_paths = true;
            for (int x = 0; x < sub.vertex_count() && still_paths; ++x)
              if (sub.degree(x) > 2) still_paths = false;
            if (still_paths) {
              auto comps = components_within(sub, sub.vertices());
              if (sub.edge_count() == sub.vertex_count() - static_cast<int>(comps.size()))
                CHECK(path_cover_number(sub) <
                      path_cover_number(induced_subgraph(g, ob->W)));
            }
            break;
          }
          case ObstructionKind::B:
            CHECK(k_lower_bound(induced_subgraph(h, ob->W)) <=
                  k_lower_bound(induced_subgraph(g, ob->W)));
            break;
          case ObstructionKind::C: {
            bool in_w_u = ob->W.contains(u), in_w_v = ob->W.contains(v);
            if (in_w_u && in_w_v) {
              // Clause (i): W is no longer independent.
              bool independent = true;
              for (int x = ob->W.first(); x >= 0 && independent; x = ob->W.next(x))
                if (h.neighbors(x).intersects(ob->W)) independent = false;
              CHECK(!independent);
            } else {
              // Clause (ii): the X-side endpoint gained a W-neighbour, so the
              // edge supply 2*n2 + n1 strictly grew.
              int x_end = in_w_u ? v : u;
              CHECK(h.neighbors(x_end).intersection_size(ob->W) ==
                    g.neighbors(x_end).intersection_size(ob->W) + 1);
            }
            break;
          }
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("finders only return valid witnesses on random graphs") {
  std::mt19937 rng(10);
  for (int it = 0; it < 3000; ++it) {
    int n = 4 + static_cast<int>(rng() % 10);
    Graph g = oracles::random_graph(rng, n, 0.1 + 0.6 * (rng() % 100) / 100.0);
    for (auto finder : {find_type_A, find_type_B, find_type_C}) {
      auto ob = finder(g, 20);
      if (ob) CHECK(validate_obstruction(g, *ob));
    }
  }
}

TEST_CASE("lemma contrapositive: no obstructions in almost hypocyclic graphs") {
  // Every connected graph on <= 7 vertices that is almost hypocyclic (or
  // hypocyclic) admits no obstruction of any type.
  for (int n = 4; n <= 7; ++n) {
    for (const auto& g : oracles::all_graphs_up_to_iso(n, /*connected_only=*/true)) {
      int bad = 0;
      for (int v = 0; v < n; ++v)
        if (!oracles::dp_has_hamiltonian_cycle_without(g, v)) ++bad;
      if (bad > 1) continue;  // neither hypocyclic nor almost hypocyclic
      CHECK(!exhaustive_has_type_A(g));
      CHECK(!exhaustive_has_type_B(g));
      CHECK(!exhaustive_has_type_C(g));
    }
  }
}
