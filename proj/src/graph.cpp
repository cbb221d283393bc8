#include "ahgen/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ahgen {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order out of range: " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adj_[u].contains(v)) throw std::invalid_argument("edge already present");
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adj_[u].contains(v))
    throw std::invalid_argument("no such edge");
  adj_[u].erase(v);
  adj_[v].erase(u);
  --m_;
}

VertexSet reach_within(const Graph& g, int seed, const VertexSet& within) {
  VertexSet seen = VertexSet::single(seed);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet nxt;
    for (int v = frontier.first(); v >= 0; v = frontier.next(v)) nxt |= g.neighbors(v);
    nxt &= within;
    nxt -= seen;
    seen |= nxt;
    frontier = nxt;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  return reach_within(g, 0, g.vertices()).size() == n;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> comps;
  while (!within.empty()) {
    VertexSet c = reach_within(g, within.first(), within);
    comps.push_back(c);
    within -= c;
  }
  return comps;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge scanned at depth d closes a cycle
  // of length dist[u] + dist[v] + 1. The minimum over all roots is exact.
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n), queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    queue[tail++] = root;
    dist[root] = 0;
    parent[root] = -1;
    while (head < tail) {
      int u = queue[head++];
      if (best >= 0 && 2 * dist[u] >= best) break;
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
    if (best == 3) return 3;
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  int n = g.vertex_count();
  if (n <= k) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  // No separator of size k-1 may exist; removing fewer vertices is covered
  // because a smaller separator extends to one of size k-1 when n > k.
  VertexSet all = g.vertices();
  // Enumerate (k-1)-subsets.
  std::vector<int> idx(k - 1);
  for (int i = 0; i < k - 1; ++i) idx[i] = i;
  while (true) {
    VertexSet removed;
    for (int i : idx) removed.insert(i);
    VertexSet rest = all - removed;
    if (reach_within(g, rest.first(), rest).size() != rest.size()) return false;
    int pos = k - 2;
    while (pos >= 0 && idx[pos] == n - (k - 1) + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k - 1; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

bool has_nontrivial_3_edge_cut(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("has_nontrivial_3_edge_cut requires a connected graph");
  auto es = g.edges();
  int m = static_cast<int>(es.size());
  Graph h = g;
  for (int i = 0; i < m; ++i) {
    h.remove_edge(es[i].first, es[i].second);
    for (int j = i + 1; j < m; ++j) {
      h.remove_edge(es[j].first, es[j].second);
      for (int k = j + 1; k < m; ++k) {
        h.remove_edge(es[k].first, es[k].second);
        auto comps = components_within(h, h.vertices());
        if (comps.size() == 2 && comps[0].size() >= 2 && comps[1].size() >= 2) {
          return true;
        }
        h.add_edge(es[k].first, es[k].second);
      }
      h.add_edge(es[j].first, es[j].second);
    }
    h.add_edge(es[i].first, es[i].second);
  }
  return false;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s, std::vector<int>* back_map) {
  std::vector<int> order;
  for (int v = s.first(); v >= 0; v = s.next(v)) order.push_back(v);
  std::vector<int> new_label(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) new_label[order[i]] = i;
  Graph h(static_cast<int>(order.size()));
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    int u = order[i];
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
      if (s.contains(v)) h.add_edge(i, new_label[v]);
  }
  if (back_map) *back_map = std::move(order);
  return h;
}

bool distance_at_least(const Graph& g, int u, int v, int d) {
  if (u == v) return d <= 0;
  VertexSet seen = VertexSet::single(u);
  VertexSet frontier = seen;
  VertexSet all = g.vertices();
  for (int depth = 1; depth < d; ++depth) {
    VertexSet nxt;
    for (int x = frontier.first(); x >= 0; x = frontier.next(x)) nxt |= g.neighbors(x);
    nxt &= all;
    nxt -= seen;
    if (nxt.contains(v)) return false;
    if (nxt.empty()) return true;
    seen |= nxt;
    frontier = nxt;
  }
  return true;
}

}  // namespace ahgen
