#include "ahgen/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ahgen/hamiltonicity.hpp"
#include "ahgen/planarity.hpp"

namespace ahgen {

namespace {

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

void require_edge(const Graph& g, std::pair<int, int> e, const char* what) {
  if (e.first == e.second || !g.has_edge(e.first, e.second))
    throw std::invalid_argument(std::string(what) + " must be an edge of the graph");
}

}  // namespace

Graph dot_product(const Graph& h, std::pair<int, int> ab, std::pair<int, int> cd,
                  const Graph& hp, std::pair<int, int> xy, int wiring) {
  if (!is_cubic(h) || !is_cubic(hp))
    throw std::invalid_argument("dot product requires cubic graphs");
  if (h.vertex_count() < 6 || hp.vertex_count() < 6)
    throw std::invalid_argument("dot product requires at least 6 vertices per factor");
  require_edge(h, ab, "ab");
  require_edge(h, cd, "cd");
  require_edge(hp, xy, "xy");
  if (wiring < 0 || wiring > 3) throw std::invalid_argument("wiring must be in 0..3");
  auto [a, b] = ab;
  auto [c, d] = cd;
  if (a == c || a == d || b == c || b == d)
    throw std::invalid_argument("ab and cd must be independent edges");
  auto [x, y] = xy;

  // The two remaining neighbours of x and of y, in ascending order.
  std::array<int, 2> xn{}, yn{};
  int xi = 0, yi = 0;
  for (int v = hp.neighbors(x).first(); v >= 0; v = hp.neighbors(x).next(v))
    if (v != y) xn[xi++] = v;
  for (int v = hp.neighbors(y).first(); v >= 0; v = hp.neighbors(y).next(v))
    if (v != x) yn[yi++] = v;
  if (wiring & 1) std::swap(xn[0], xn[1]);
  if (wiring & 2) std::swap(yn[0], yn[1]);

  int hn = h.vertex_count();
  std::vector<int> map_hp(hp.vertex_count(), -1);
  int next = hn;
  for (int v = 0; v < hp.vertex_count(); ++v)
    if (v != x && v != y) map_hp[v] = next++;

  Graph out(hn + hp.vertex_count() - 2);
  for (auto [u, v] : h.edges())
    if (!(std::minmax(u, v) == std::minmax(a, b) || std::minmax(u, v) == std::minmax(c, d)))
      out.add_edge(u, v);
  for (auto [u, v] : hp.edges())
    if (u != x && u != y && v != x && v != y) out.add_edge(map_hp[u], map_hp[v]);
  out.add_edge(a, map_hp[xn[0]]);
  out.add_edge(b, map_hp[xn[1]]);
  out.add_edge(c, map_hp[yn[0]]);
  out.add_edge(d, map_hp[yn[1]]);

  if (!is_cubic(out)) throw std::logic_error("dot product output is not cubic");
  return out;
}

std::vector<Graph> dot_product_all_wirings(const Graph& h, std::pair<int, int> ab,
                                           std::pair<int, int> cd, const Graph& hp,
                                           std::pair<int, int> xy) {
  std::vector<Graph> out;
  for (int w = 0; w < 4; ++w) out.push_back(dot_product(h, ab, cd, hp, xy, w));
  return out;
}

SuitabilityReport check_suitable_pair(const Graph& h, std::pair<int, int> ab,
                                      std::pair<int, int> cd) {
  if (!is_cubic(h)) throw std::invalid_argument("suitability requires a cubic graph");
  require_edge(h, ab, "ab");
  require_edge(h, cd, "cd");
  auto [a, b] = ab;
  auto [c, d] = cd;
  if (a == c || a == d || b == c || b == d)
    throw std::invalid_argument("ab and cd must be independent edges");

  Graph j = h;
  j.remove_edge(a, b);
  j.remove_edge(c, d);

  SuitabilityReport report;
  report.ab = ab;
  report.cd = cd;
  report.good_ac = find_hamiltonian_path(j, a, c).has_value();
  report.good_ad = find_hamiltonian_path(j, a, d).has_value();
  report.good_bc = find_hamiltonian_path(j, b, c).has_value();
  report.good_bd = find_hamiltonian_path(j, b, d).has_value();
  report.good_double = find_two_spanning_paths(j, ab, cd).has_value();

  bool every_vertex_covered = true;
  report.per_vertex.resize(h.vertex_count());
  for (int t = 0; t < h.vertex_count(); ++t) {
    VertexSet rest = j.vertices();
    rest.erase(t);
    bool ab_good =
        t != a && t != b && find_hamiltonian_path_within(j, rest, a, b).has_value();
    bool cd_good =
        t != c && t != d && find_hamiltonian_path_within(j, rest, c, d).has_value();
    report.per_vertex[t] = {ab_good, cd_good};
    if (!ab_good && !cd_good) every_vertex_covered = false;
  }

  report.suitable = report.good_ac && report.good_ad && report.good_bc &&
                    report.good_bd && report.good_double && every_vertex_covered;

  if (is_planar(h)) {
    auto emb = embed(h);
    bool same = false;
    for (const auto& walk : emb.faces) {
      int len = static_cast<int>(walk.size());
      bool has_ab = false, has_cd = false;
      for (int i = 0; i < len; ++i) {
        auto e = std::minmax(walk[i], walk[(i + 1) % len]);
        if (e == std::minmax(a, b)) has_ab = true;
        if (e == std::minmax(c, d)) has_cd = true;
      }
      if (has_ab && has_cd) same = true;
    }
    report.same_face = same;
  }
  return report;
}

Graph th_expand(const Graph& g, const std::array<int, 4>& quad) {
  auto [v1, v2, v3, v4] = quad;
  VertexSet distinct;
  for (int v : quad) distinct.insert(v);
  if (distinct.size() != 4 || !g.has_edge(v1, v2) || !g.has_edge(v2, v3) ||
      !g.has_edge(v3, v4) || !g.has_edge(v4, v1))
    throw std::invalid_argument("th_expand requires a 4-cycle v1v2v3v4");

  int n = g.vertex_count();
  Graph out(n + 4);
  for (auto [u, v] : g.edges())
    if (!(std::minmax(u, v) == std::minmax(v1, v2) ||
          std::minmax(u, v) == std::minmax(v3, v4)))
      out.add_edge(u, v);
  // New quadrilateral v1'v2'v3'v4' at labels n..n+3, spoked to the old one.
  out.add_edge(n + 0, n + 1);
  out.add_edge(n + 1, n + 2);
  out.add_edge(n + 2, n + 3);
  out.add_edge(n + 3, n + 0);
  out.add_edge(v1, n + 0);
  out.add_edge(v2, n + 1);
  out.add_edge(v3, n + 2);
  out.add_edge(v4, n + 3);
  return out;
}

Graph vertex_identify(const Graph& g, int x, const Graph& h, int y,
                      const std::array<int, 3>& matching) {
  if (g.degree(x) != 3 || h.degree(y) != 3)
    throw std::invalid_argument("vertex identification requires cubic x and y");
  std::array<int, 3> xn{};
  int xi = 0;
  for (int v = g.neighbors(x).first(); v >= 0; v = g.neighbors(x).next(v)) xn[xi++] = v;
  VertexSet ym;
  for (int v : matching) {
    if (!h.neighbors(y).contains(v))
      throw std::invalid_argument("matching must map onto the neighbours of y");
    ym.insert(v);
  }
  if (ym.size() != 3) throw std::invalid_argument("matching must be a bijection");

  // G - x keeps its labels compacted; H - y - N(y) follows. The matched
  // neighbour pairs collapse onto the G-side label.
  int gn = g.vertex_count(), hn = h.vertex_count();
  std::vector<int> map_g(gn, -1), map_h(hn, -1);
  int next = 0;
  for (int v = 0; v < gn; ++v)
    if (v != x) map_g[v] = next++;
  for (int i = 0; i < 3; ++i) map_h[matching[i]] = map_g[xn[i]];
  for (int v = 0; v < hn; ++v)
    if (v != y && map_h[v] < 0) map_h[v] = next++;

  Graph out(gn + hn - 5);
  for (auto [u, v] : g.edges())
    if (u != x && v != x) out.add_edge(map_g[u], map_g[v]);
  for (auto [u, v] : h.edges()) {
    if (u == y || v == y) continue;
    if (out.has_edge(map_h[u], map_h[v]))
      throw std::invalid_argument(
          "vertex identification would create a multi-edge (overlapping neighbourhoods)");
    out.add_edge(map_h[u], map_h[v]);
  }
  return out;
}

}  // namespace ahgen
