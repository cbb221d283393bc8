#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ahgen/canonical.hpp"

namespace ahgen::oracles {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g, int skip = -1) {
  std::vector<std::uint32_t> nbr(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    if (u == skip || v == skip) continue;
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  return nbr;
}

bool dp_cycle_over(const std::vector<std::uint32_t>& nbr, std::uint32_t verts) {
  int count = std::popcount(verts);
  if (count < 3) return false;
  int start = std::countr_zero(verts);
  std::uint32_t others = verts & ~(1u << start);
  // dp[mask] = endpoints v of paths start..v spanning {start} | mask.
  std::vector<std::uint32_t> dp(1u << std::popcount(others), 0);
  std::vector<int> labels;
  for (std::uint32_t rest = others; rest; rest &= rest - 1)
    labels.push_back(std::countr_zero(rest));
  int k = static_cast<int>(labels.size());
  auto compress = [&](int v) {
    return static_cast<int>(std::find(labels.begin(), labels.end(), v) - labels.begin());
  };
  for (int i = 0; i < k; ++i)
    if (nbr[start] & (1u << labels[i])) dp[1u << i] |= 1u << i;
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    for (std::uint32_t e = ends; e; e &= e - 1) {
      int vi = std::countr_zero(e);
      for (std::uint32_t cand = nbr[labels[vi]] & others; cand; cand &= cand - 1) {
        int u = std::countr_zero(cand);
        int ui = compress(u);
        if (mask & (1u << ui)) continue;
        dp[mask | (1u << ui)] |= 1u << ui;
      }
    }
  }
  std::uint32_t full = static_cast<std::uint32_t>(dp.size() - 1);
  for (std::uint32_t e = dp[full]; e; e &= e - 1)
    if (nbr[start] & (1u << labels[std::countr_zero(e)])) return true;
  return false;
}

}  // namespace

bool dp_has_hamiltonian_cycle(const Graph& g) {
  if (g.vertex_count() > 24) throw std::invalid_argument("dp oracle capped at 24");
  std::uint32_t all = (g.vertex_count() >= 32) ? ~0u : ((1u << g.vertex_count()) - 1);
  return dp_cycle_over(adjacency_masks(g), all);
}

bool dp_has_hamiltonian_cycle_without(const Graph& g, int deleted) {
  if (g.vertex_count() > 24) throw std::invalid_argument("dp oracle capped at 24");
  std::uint32_t all = ((1u << g.vertex_count()) - 1) & ~(1u << deleted);
  return dp_cycle_over(adjacency_masks(g, deleted), all);
}

namespace {

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                    std::vector<bool>& used, int v) {
  int n = a.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.has_edge(u, v) != b.has_edge(map_ab[u], w)) ok = false;
    if (!ok) continue;
    map_ab[v] = w;
    used[w] = true;
    if (extend_mapping(a, b, map_ab, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map_ab(a.vertex_count(), -1);
  std::vector<bool> used(a.vertex_count(), false);
  return extend_mapping(a, b, map_ab, used, 0);
}

std::string reference_graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int j = 0; j < 6; ++j) value = value * 2 + bits[i + j];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

Graph reference_graph6_decode(const std::string& s) {
  std::size_t pos = 0;
  int n;
  if (s[0] == '~') {
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  std::vector<int> bits;
  for (; pos < s.size(); ++pos)
    for (int j = 5; j >= 0; --j) bits.push_back((s[pos] - 63) >> j & 1);
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[k++]) g.add_edge(i, j);
  return g;
}

std::optional<int> brute_girth(const Graph& g) {
  // Shortest cycle through each edge: remove it, find the distance between
  // its endpoints.
  int best = -1;
  Graph h = g;
  for (auto [u, v] : g.edges()) {
    h.remove_edge(u, v);
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue{u};
    dist[u] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int y = h.neighbors(x).first(); y >= 0; y = h.neighbors(x).next(y))
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    h.add_edge(u, v);
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

bool simple_connected_after_removal(const Graph& g, const std::vector<int>& removed) {
  int n = g.vertex_count();
  std::vector<bool> gone(n, false);
  for (int v : removed) gone[v] = true;
  int first = -1;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) {
      first = v;
      break;
    }
  if (first < 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{first};
  seen[first] = true;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (!gone[u] && !seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  int alive = n - static_cast<int>(removed.size());
  return visited == alive;
}

bool all_removals_connected(const Graph& g, std::vector<int>& removed, int from, int left) {
  if (left == 0) return simple_connected_after_removal(g, removed);
  for (int v = from; v < g.vertex_count(); ++v) {
    removed.push_back(v);
    if (!all_removals_connected(g, removed, v + 1, left - 1)) {
      removed.pop_back();
      return false;
    }
    removed.pop_back();
  }
  return true;
}

}  // namespace

bool brute_k_connected(const Graph& g, int k) {
  if (g.vertex_count() <= k) return false;
  std::vector<int> removed;
  return all_removals_connected(g, removed, 0, k - 1);
}

std::vector<Graph> all_graphs_up_to_iso(int n, bool connected_only) {
  std::vector<Graph> layer{Graph(n)};
  std::vector<Graph> all = layer;
  std::unordered_set<std::string> seen{canonical_key(Graph(n)).bytes};
  while (!layer.empty()) {
    std::vector<Graph> next;
    for (const auto& g : layer) {
      Graph h = g;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (h.has_edge(u, v)) continue;
          h.add_edge(u, v);
          auto key = canonical_key(h);
          if (seen.insert(key.bytes).second) next.push_back(h);
          h.remove_edge(u, v);
        }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  if (connected_only) {
    std::vector<Graph> conn;
    for (auto& g : all)
      if (is_connected(g)) conn.push_back(std::move(g));
    return conn;
  }
  return all;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::optional<int> brute_exceptional_vertex(const Graph& g) {
  std::vector<int> bad;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!dp_has_hamiltonian_cycle_without(g, v)) bad.push_back(v);
  if (bad.size() != 1) return std::nullopt;
  return bad.front();
}

namespace {

void enumerate_paths_through(const Graph& g, std::uint32_t allowed, std::uint32_t path,
                             int left, int right,
                             std::vector<std::uint32_t>& collected) {
  collected.push_back(path);
  for (int side = 0; side < 2; ++side) {
    int tip = side == 0 ? left : right;
    for (int u = g.neighbors(tip).first(); u >= 0; u = g.neighbors(tip).next(u)) {
      if (!(allowed & (1u << u)) || (path & (1u << u))) continue;
      enumerate_paths_through(g, allowed, path | (1u << u), side == 0 ? u : left,
                              side == 0 ? right : u, collected);
    }
  }
}

int cover_rec(const Graph& g, std::uint32_t uncovered,
              std::unordered_map<std::uint32_t, int>& memo) {
  if (uncovered == 0) return 0;
  auto it = memo.find(uncovered);
  if (it != memo.end()) return it->second;
  int low = std::countr_zero(uncovered);
  std::vector<std::uint32_t> paths;
  enumerate_paths_through(g, uncovered, 1u << low, low, low, paths);
  int best = g.vertex_count() + 1;
  std::unordered_set<std::uint32_t> tried;
  for (std::uint32_t p : paths) {
    if (!tried.insert(p).second) continue;
    best = std::min(best, 1 + cover_rec(g, uncovered & ~p, memo));
  }
  memo[uncovered] = best;
  return best;
}

}  // namespace

int brute_path_cover(const Graph& g) {
  if (g.vertex_count() > 12) throw std::invalid_argument("brute path cover capped at 12");
  if (g.vertex_count() == 0) return 0;
  std::unordered_map<std::uint32_t, int> memo;
  return cover_rec(g, (1u << g.vertex_count()) - 1, memo);
}

}  // namespace ahgen::oracles
