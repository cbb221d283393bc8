#include "ahgen/obstructions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ahgen {

namespace {

// k(G) restricted to the subgraph induced by `active`.
int k_lower_bound_within(const Graph& g, VertexSet active) {
  int acc = 0;
  while (!active.empty()) {
    auto comps = components_within(g, active);
    int isolated_objects = 0;
    VertexSet isolated_vertices;
    for (const auto& comp : comps) {
      if (comp.size() <= 2) {
        ++isolated_objects;
        isolated_vertices |= comp;
      }
    }
    if (isolated_objects == 0) {
      int degree_one = 0;
      for (int v = active.first(); v >= 0; v = active.next(v))
        if (g.neighbors(v).intersection_size(active) == 1) ++degree_one;
      return acc + std::max(1, (degree_one + 1) / 2);
    }
    acc += isolated_objects;
    active -= isolated_vertices;
  }
  return acc;
}

// True iff the subgraph induced by W is a disjoint union of paths; fills the
// per-vertex degree inside W and the number of components.
bool union_of_paths(const Graph& g, const VertexSet& w, int* comp_count) {
  int verts = 0, edges2 = 0;
  for (int v = w.first(); v >= 0; v = w.next(v)) {
    int d = g.neighbors(v).intersection_size(w);
    if (d > 2) return false;
    ++verts;
    edges2 += d;
  }
  int comps = static_cast<int>(components_within(g, w).size());
  if (edges2 / 2 != verts - comps) return false;  // some component has a cycle
  if (comp_count) *comp_count = comps;
  return true;
}

std::vector<int> vertices_by_degree(const Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  return order;
}

}  // namespace

int k_lower_bound(const Graph& g) { return k_lower_bound_within(g, g.vertices()); }

int path_cover_number(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  int comps = 0;
  if (union_of_paths(g, g.vertices(), &comps)) return comps;

  // Exact subset DP, used by test oracles and the occasional small query.
  if (n > 16) throw std::invalid_argument("exact path cover is capped at 16 vertices");
  int full = (1 << n) - 1;
  // endpoints[S]: vertices v such that G[S] has a hamiltonian path ending at v.
  std::vector<std::uint32_t> endpoints(full + 1, 0);
  for (int v = 0; v < n; ++v) endpoints[1u << v] = 1u << v;
  std::vector<std::uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      nbr[v] |= 1u << u;
  for (int s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) continue;
    std::uint32_t ends = 0;
    for (int v = 0; v < n; ++v) {
      if (!(s & (1 << v))) continue;
      if (endpoints[s ^ (1 << v)] & nbr[v]) ends |= 1u << v;
    }
    endpoints[s] = ends;
  }
  std::vector<int> cover(full + 1, n + 1);
  cover[0] = 0;
  for (int s = 1; s <= full; ++s) {
    int low = s & (-s);
    // The path containing the lowest vertex of S ranges over sub-subsets.
    for (int t = s; t; t = (t - 1) & s) {
      if (!(t & low)) continue;
      if (endpoints[t] == 0 && (t & (t - 1)) != 0) continue;
      cover[s] = std::min(cover[s], 1 + cover[s ^ t]);
    }
  }
  return cover[full];
}

bool validate_obstruction(const Graph& g, const Obstruction& ob) {
  VertexSet all = g.vertices();
  if (ob.W.intersects(ob.X)) return false;
  if (!((ob.W | ob.X) == all)) return false;
  int w_size = ob.W.size(), x_size = ob.X.size();
  if (w_size <= 1 || x_size <= 1) return false;
  switch (ob.kind) {
    case ObstructionKind::A: {
      int comps = 0;
      if (!union_of_paths(g, ob.W, &comps)) return false;
      return comps >= x_size;
    }
    case ObstructionKind::B:
      return k_lower_bound_within(g, ob.W) >= x_size;
    case ObstructionKind::C: {
      if (!ob.v || !ob.X.contains(*ob.v)) return false;
      for (int u = ob.W.first(); u >= 0; u = ob.W.next(u))
        if (g.neighbors(u).intersects(ob.W)) return false;
      int n1 = 0, n2 = 0;
      for (int x = ob.X.first(); x >= 0; x = ob.X.next(x)) {
        if (x == *ob.v) continue;
        int c = g.neighbors(x).intersection_size(ob.W);
        if (c == 1) ++n1;
        if (c >= 2) ++n2;
      }
      if (n1 != ob.n1 || n2 != ob.n2) return false;
      return 2 * n2 + n1 < 2 * w_size;
    }
  }
  return false;
}

std::vector<std::pair<int, int>> good_edges(const Graph& g, const Obstruction& ob) {
  if (!validate_obstruction(g, ob))
    throw std::invalid_argument("stale obstruction: invariants no longer hold");
  std::vector<std::pair<int, int>> out;
  auto consider = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (!g.has_edge(u, v)) out.emplace_back(u, v);
  };
  switch (ob.kind) {
    case ObstructionKind::A: {
      auto comps = components_within(g, ob.W);
      std::array<int, kMaxVertices> comp_of{};
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (int v = comps[i].first(); v >= 0; v = comps[i].next(v))
          comp_of[v] = static_cast<int>(i);
      for (int u = ob.W.first(); u >= 0; u = ob.W.next(u)) {
        int du = g.neighbors(u).intersection_size(ob.W);
        for (int v = ob.W.next(u); v >= 0; v = ob.W.next(v)) {
          if (comp_of[u] == comp_of[v]) continue;
          int dv = g.neighbors(v).intersection_size(ob.W);
          if (du <= 1 || dv <= 1) consider(u, v);
        }
      }
      break;
    }
    case ObstructionKind::B: {
      for (int u = ob.W.first(); u >= 0; u = ob.W.next(u)) {
        int du = g.neighbors(u).intersection_size(ob.W);
        for (int v = ob.W.next(u); v >= 0; v = ob.W.next(v)) {
          int dv = g.neighbors(v).intersection_size(ob.W);
          if (du <= 1 || dv <= 1) consider(u, v);
        }
      }
      break;
    }
    case ObstructionKind::C: {
      for (int u = ob.W.first(); u >= 0; u = ob.W.next(u))
        for (int v = ob.W.next(u); v >= 0; v = ob.W.next(v)) consider(u, v);
      for (int x = ob.X.first(); x >= 0; x = ob.X.next(x)) {
        if (x == *ob.v) continue;
        if (g.neighbors(x).intersection_size(ob.W) > 1) continue;
        for (int u = ob.W.first(); u >= 0; u = ob.W.next(u)) consider(u, x);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Shared candidate-selection shell: evaluates grown witnesses, keeps the one
// with the fewest good edges.
struct BestPick {
  std::optional<Obstruction> ob;
  std::size_t branch = ~std::size_t{0};

  void offer(const Graph& g, Obstruction cand) {
    if (!validate_obstruction(g, cand))
      throw std::logic_error("obstruction finder produced an invalid witness");
    std::size_t b = good_edges(g, cand).size();
    if (!ob || b < branch) {
      ob = std::move(cand);
      branch = b;
    }
  }
};

}  // namespace

std::optional<Obstruction> find_type_A(const Graph& g, int candidate_cap) {
  // For W inducing a disjoint union of paths, p(G[W]) = |W| - m_W, so the
  // obstruction condition p >= |X| reads 2|W| - m_W >= n. Growing W by a
  // vertex with 0 or 1 neighbours in W raises that margin by 2 or 1; a
  // vertex with two W-neighbours never helps and is not taken.
  int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  auto order = vertices_by_degree(g);
  BestPick best;
  std::set<std::array<std::uint64_t, 2>> seen;
  int tried = 0;
  for (int seed : order) {
    if (tried >= candidate_cap) break;
    ++tried;
    VertexSet w = VertexSet::single(seed);
    std::array<std::uint8_t, kMaxVertices> deg_w{};
    int margin = 2;  // 2|W| - m_W
    while (true) {
      int pick = -1, pick_cnt = 3, pick_deg = kMaxVertices + 1;
      for (int u : order) {
        if (w.contains(u)) continue;
        VertexSet nb = g.neighbors(u) & w;
        int cnt = nb.size();
        if (cnt > 1) continue;  // joining or thickening a path never helps
        if (cnt == 1 && deg_w[nb.first()] >= 2) continue;  // would bend a path
        int du = g.degree(u);
        if (cnt < pick_cnt || (cnt == pick_cnt && du < pick_deg)) {
          pick = u;
          pick_cnt = cnt;
          pick_deg = du;
        }
      }
      if (pick < 0) break;
      VertexSet nb = g.neighbors(pick) & w;
      w.insert(pick);
      if (!nb.empty()) {
        ++deg_w[nb.first()];
        ++deg_w[pick];
      }
      margin += 2 - nb.size();
      // A tight witness has the fewest components, hence the fewest good
      // edges; stop as soon as the obstruction condition holds.
      if (margin >= n && w.size() > 1 && n - w.size() > 1) break;
    }
    if (margin < n || w.size() <= 1 || n - w.size() <= 1) continue;
    if (!seen.insert({w.word(0), w.word(1)}).second) continue;
    best.offer(g, Obstruction{ObstructionKind::A, w, g.vertices() - w, std::nullopt, 0, 0});
  }
  return best.ob;
}

namespace {

// Bounded DFS for small independent W with concentrated neighbourhoods:
// S(W) = sum over x outside W of min(|N(x) & W|, 2) can only reach the
// condition S - min(c(v), 2) < 2|W| when the neighbourhoods of W overlap
// heavily, so branches whose margin cannot recover within the size budget
// are cut.
struct SmallCSearch {
  const Graph& g;
  int n;
  const std::vector<int>& order;
  BestPick& best;
  int budget = 20000;
  static constexpr int kMaxW = 6;
  std::array<std::uint8_t, kMaxVertices> capped_count{};  // min(|N(x) & W|, 2)
  int supply = 0;                                         // sum of capped_count
  VertexSet w;

  SmallCSearch(const Graph& gg, const std::vector<int>& ord, BestPick& b)
      : g(gg), n(gg.vertex_count()), order(ord), best(b) {}

  void try_report() {
    int ws = w.size();
    if (ws <= 1 || n - ws <= 1) return;
    int best_relief = 0;
    for (int v = 0; v < n; ++v)
      if (!w.contains(v)) best_relief = std::max<int>(best_relief, capped_count[v]);
    if (supply - best_relief >= 2 * ws) return;
    VertexSet x_side = g.vertices() - w;
    for (int v = x_side.first(); v >= 0; v = x_side.next(v)) {
      if (supply - capped_count[v] >= 2 * ws) continue;
      int n1 = 0, n2 = 0;
      for (int x = x_side.first(); x >= 0; x = x_side.next(x)) {
        if (x == v) continue;
        int c = g.neighbors(x).intersection_size(w);
        if (c == 1) ++n1;
        if (c >= 2) ++n2;
      }
      best.offer(g, Obstruction{ObstructionKind::C, w, x_side, v, n1, n2});
      return;  // one v per witness is enough for branching
    }
  }

  void dfs(int min_order_pos) {
    if (--budget < 0) return;
    try_report();
    int ws = w.size();
    if (ws >= kMaxW) return;
    // Even if every further vertex were free (+2 margin each), the condition
    // must become reachable.
    if (supply - 2 >= 2 * ws + 2 * (kMaxW - ws)) return;
    for (std::size_t i = min_order_pos; i < order.size(); ++i) {
      int u = order[i];
      if (w.contains(u) || g.neighbors(u).intersects(w)) continue;
      int delta = -capped_count[u];  // u leaves the X side (always zero-count)
      std::array<std::uint8_t, kMaxVertices> bumped;
      int bumps = 0;
      for (int x = g.neighbors(u).first(); x >= 0; x = g.neighbors(u).next(x))
        if (capped_count[x] < 2) {
          ++capped_count[x];
          bumped[bumps++] = static_cast<std::uint8_t>(x);
          ++delta;
        }
      w.insert(u);
      supply += delta;
      dfs(static_cast<int>(i) + 1);
      supply -= delta;
      w.erase(u);
      for (int k = 0; k < bumps; ++k) --capped_count[bumped[k]];
    }
  }
};

}  // namespace

std::optional<Obstruction> find_type_C(const Graph& g, int candidate_cap) {
  // With T = sum over x in X of min(|N(x) & W|, 2), the obstruction condition
  // is T - min(c(v*), 2) < 2|W| for the best v*. Growing the independent set
  // W by u changes the margin 2|W| - T by 2 minus the number of u-neighbours
  // whose count is still below the cap of 2; the greedy takes the best
  // vertex while the margin can still improve.
  int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  auto order = vertices_by_degree(g);
  BestPick best;

  // Small concentrated witnesses first (they branch the least), then the
  // greedy growth for the large sparse ones.
  SmallCSearch small(g, order, best);
  small.dfs(0);

  std::set<std::array<std::uint64_t, 2>> seen;
  int tried = 0;
  for (int seed : order) {
    if (tried >= candidate_cap) break;
    ++tried;
    VertexSet w = VertexSet::single(seed);
    std::array<std::uint8_t, kMaxVertices> wcount{};  // |N(x) & W| capped at 2
    int supply = 0;
    for (int x = g.neighbors(seed).first(); x >= 0; x = g.neighbors(seed).next(x)) {
      ++wcount[x];
      ++supply;
    }
    bool valid = false;
    while (!valid) {
      int pick = -1, pick_gain = -kMaxVertices, pick_deg = kMaxVertices + 1;
      for (int u : order) {
        if (w.contains(u) || g.neighbors(u).intersects(w)) continue;
        int gain = 2;
        for (int x = g.neighbors(u).first(); x >= 0; x = g.neighbors(u).next(x))
          if (wcount[x] < 2) --gain;
        int du = g.degree(u);
        if (gain > pick_gain || (gain == pick_gain && du < pick_deg)) {
          pick = u;
          pick_gain = gain;
          pick_deg = du;
        }
      }
      if (pick < 0) break;
      w.insert(pick);
      for (int x = g.neighbors(pick).first(); x >= 0; x = g.neighbors(pick).next(x))
        if (wcount[x] < 2) {
          ++wcount[x];
          ++supply;
        }
      // Tight stop: the first W meeting the condition branches least.
      if (w.size() > 1 && n - w.size() > 1) {
        int relief = 0;
        for (int v = 0; v < n; ++v)
          if (!w.contains(v)) relief = std::max<int>(relief, wcount[v]);
        valid = supply - relief < 2 * w.size();
      }
    }
    int w_size = w.size();
    if (!valid || !seen.insert({w.word(0), w.word(1)}).second) continue;
    VertexSet x_side = g.vertices() - w;
    for (int v = x_side.first(); v >= 0; v = x_side.next(v)) {
      if (supply - wcount[v] >= 2 * w_size) continue;
      int n1 = 0, n2 = 0;
      for (int x = x_side.first(); x >= 0; x = x_side.next(x)) {
        if (x == v) continue;
        int c = g.neighbors(x).intersection_size(w);
        if (c == 1) ++n1;
        if (c >= 2) ++n2;
      }
      best.offer(g, Obstruction{ObstructionKind::C, w, x_side, v, n1, n2});
      break;
    }
  }
  return best.ob;
}

std::optional<Obstruction> find_type_B(const Graph& g, int candidate_cap) {
  int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  auto order = vertices_by_degree(g);
  BestPick best;
  std::set<std::array<std::uint64_t, 2>> seen;

  // Main pass: W whose induced components all have at most two vertices, so
  // k(G[W]) is exactly the component count. Adding an untouched vertex gains
  // margin 2, pairing up with an isolated W-vertex gains 1, anything else is
  // never taken; stop as soon as k >= |X|.
  int tried = 0;
  for (int seed : order) {
    if (tried >= candidate_cap) break;
    ++tried;
    VertexSet w = VertexSet::single(seed);
    std::array<std::uint8_t, kMaxVertices> deg_w{};
    int comps = 1;
    bool valid = false;
    while (!valid) {
      int pick = -1, pick_cnt = 2, pick_deg = kMaxVertices + 1;
      for (int u : order) {
        if (w.contains(u)) continue;
        VertexSet nb = g.neighbors(u) & w;
        int cnt = nb.size();
        if (cnt > 1) continue;
        if (cnt == 1 && deg_w[nb.first()] != 0) continue;  // keep components <= 2
        int du = g.degree(u);
        if (cnt < pick_cnt || (cnt == pick_cnt && du < pick_deg)) {
          pick = u;
          pick_cnt = cnt;
          pick_deg = du;
        }
      }
      if (pick < 0) break;
      VertexSet nb = g.neighbors(pick) & w;
      w.insert(pick);
      if (!nb.empty()) {
        ++deg_w[nb.first()];
        ++deg_w[pick];
      } else {
        ++comps;
      }
      valid = w.size() > 1 && n - w.size() > 1 && comps >= n - w.size();
    }
    if (!valid || !seen.insert({w.word(0), w.word(1)}).second) continue;
    best.offer(g, Obstruction{ObstructionKind::B, w, g.vertices() - w, std::nullopt, 0, 0});
  }
  if (best.ob) return best.ob;

  // Fallback: slow greedy over the full k recursion. Grown to a local
  // maximum of k + |W| and reported if valid anywhere along the way.
  tried = 0;
  for (int seed : order) {
    if (tried >= std::min(candidate_cap, 16)) break;
    ++tried;
    VertexSet w = VertexSet::single(seed);
    int k_cur = 1;
    bool improved = true, valid = false;
    while (improved && !valid) {
      improved = false;
      for (int u : order) {
        if (w.contains(u)) continue;
        VertexSet cand = w;
        cand.insert(u);
        int k_new = k_lower_bound_within(g, cand);
        if (k_new >= k_cur) {
          w = cand;
          k_cur = k_new;
          improved = true;
          valid = w.size() > 1 && n - w.size() > 1 && k_cur >= n - w.size();
          if (valid) break;
        }
      }
    }
    if (!valid || !seen.insert({w.word(0), w.word(1)}).second) continue;
    best.offer(g, Obstruction{ObstructionKind::B, w, g.vertices() - w, std::nullopt, 0, 0});
    break;
  }
  return best.ob;
}

}  // namespace ahgen
