#include "ahgen/hamiltonicity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ahgen {

namespace {

// Depth-first extension with degree pruning, forced-edge counting for
// degree-2 vertices of the remaining graph, and a connectivity cutoff.
// Neighbours are tried in ascending vertex index so witnesses are
// reproducible.
struct HamSearch {
  const Graph& g;
  VertexSet active;
  int start = -1;
  int target = -1;  // -1: cycle mode
  std::array<int, kMaxVertices> path{};
  int path_len = 0;
  VertexSet used;

  HamSearch(const Graph& gg, VertexSet act) : g(gg), active(act) {}

  // Remaining-slot capacity of a vertex during the search: interior vertices
  // pass through (2 slots), the moving tip and the anchor have one free slot
  // each (two when they still coincide at the root of a cycle search).
  bool prune(int cur, int anchor, const VertexSet& unvisited) {
    VertexSet avail_pool = unvisited;
    avail_pool.insert(cur);
    avail_pool.insert(anchor);
    int tip_slots = cur == anchor ? 2 : 1;
    VertexSet forced_once, forced_twice;
    auto bump = [&](int x) {
      if (!forced_once.contains(x)) {
        forced_once.insert(x);
        return true;
      }
      if (!forced_twice.contains(x)) {
        forced_twice.insert(x);
        return !((x == cur || x == anchor) && tip_slots == 1);
      }
      return false;  // a third forced edge overloads any vertex
    };
    for (int w = unvisited.first(); w >= 0; w = unvisited.next(w)) {
      VertexSet av = g.neighbors(w) & avail_pool;
      int d = av.size();
      if (d < 2) return false;
      if (d == 2) {
        int x = av.first();
        if (!bump(x) || !bump(av.next(x))) return false;
      }
    }
    if (!g.neighbors(cur).intersects(unvisited)) return false;
    if (!g.neighbors(anchor).intersects(unvisited)) return false;
    // The unvisited vertices together with the tip must stay connected.
    VertexSet pool = unvisited;
    pool.insert(cur);
    VertexSet seen = VertexSet::single(cur);
    VertexSet frontier = seen;
    while (true) {
      VertexSet nxt;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v)) nxt |= g.neighbors(v);
      nxt &= pool;
      nxt -= seen;
      if (nxt.empty()) break;
      seen |= nxt;
      if (seen == pool) return true;
      frontier = nxt;
    }
    return seen == pool;
  }

  bool extend(int cur) {
    VertexSet unvisited = active - used;
    int anchor = target < 0 ? start : target;
    if (target >= 0) unvisited.erase(target);
    if (unvisited.empty()) {
      // In cycle mode, accept only one of the two traversal directions.
      if (target < 0 && path_len >= 3 && cur < path[1]) return false;
      return g.has_edge(cur, anchor);
    }
    if (!prune(cur, anchor, unvisited)) return false;
    VertexSet cand = g.neighbors(cur) & unvisited;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      used.insert(v);
      path[path_len++] = v;
      if (extend(v)) return true;
      used.erase(v);
      --path_len;
    }
    return false;
  }

  std::optional<std::vector<int>> run_cycle() {
    int count = active.size();
    if (count < 3) return std::nullopt;
    // Fix the root at a vertex of minimum degree inside the active set.
    int best = -1, best_deg = kMaxVertices + 1;
    for (int v = active.first(); v >= 0; v = active.next(v)) {
      int d = g.neighbors(v).intersection_size(active);
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    }
    if (best_deg < 2) return std::nullopt;
    start = best;
    used = VertexSet::single(start);
    path[0] = start;
    path_len = 1;
    if (!extend(start)) return std::nullopt;
    return std::vector<int>(path.begin(), path.begin() + path_len);
  }

  std::optional<std::vector<int>> run_path(int from, int to) {
    start = from;
    target = to;
    used = VertexSet::single(from);
    path[0] = from;
    path_len = 1;
    if (!extend(from)) return std::nullopt;
    path[path_len++] = to;
    return std::vector<int>(path.begin(), path.begin() + path_len);
  }
};

void check_cycle(const Graph& g, const VertexSet& active, const std::vector<int>& cyc) {
  if (static_cast<int>(cyc.size()) != active.size())
    throw std::logic_error("hamiltonian cycle has wrong length");
  VertexSet seen;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (!active.contains(cyc[i]) || seen.contains(cyc[i]))
      throw std::logic_error("hamiltonian cycle visits a vertex twice");
    seen.insert(cyc[i]);
    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]))
      throw std::logic_error("hamiltonian cycle uses a missing edge");
  }
}

void check_path(const Graph& g, const VertexSet& active, const std::vector<int>& p,
                int u, int v) {
  if (static_cast<int>(p.size()) != active.size())
    throw std::logic_error("spanning path has wrong length");
  if (p.front() != u || p.back() != v) throw std::logic_error("spanning path endpoints wrong");
  VertexSet seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!active.contains(p[i]) || seen.contains(p[i]))
      throw std::logic_error("spanning path visits a vertex twice");
    seen.insert(p[i]);
    if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1]))
      throw std::logic_error("spanning path uses a missing edge");
  }
}

}  // namespace

std::optional<std::vector<int>> find_hamiltonian_cycle_within(const Graph& g,
                                                              const VertexSet& active) {
  HamSearch search(g, active);
  auto cyc = search.run_cycle();
  if (cyc) check_cycle(g, active, *cyc);
  return cyc;
}

std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g) {
  return find_hamiltonian_cycle_within(g, g.vertices());
}

bool is_hamiltonian_within(const Graph& g, const VertexSet& active) {
  HamSearch search(g, active);
  return search.run_cycle().has_value();
}

bool is_hamiltonian(const Graph& g) { return is_hamiltonian_within(g, g.vertices()); }

std::optional<std::vector<int>> find_hamiltonian_path_within(const Graph& g,
                                                             const VertexSet& active,
                                                             int u, int v) {
  if (u == v) throw std::invalid_argument("path end-vertices must differ");
  if (!active.contains(u) || !active.contains(v))
    throw std::invalid_argument("path end-vertices must be active");
  if (active.size() == 2) {
    if (!g.has_edge(u, v)) return std::nullopt;
    return std::vector<int>{u, v};
  }
  HamSearch search(g, active);
  auto p = search.run_path(u, v);
  if (p) check_path(g, active, *p, u, v);
  return p;
}

std::optional<std::vector<int>> find_hamiltonian_path(const Graph& g, int u, int v) {
  return find_hamiltonian_path_within(g, g.vertices(), u, v);
}

namespace {

struct TwoPathSearch {
  const Graph& g;
  int a, b, c, d;
  VertexSet used;
  std::array<int, kMaxVertices> path1{};
  int len1 = 0;
  std::optional<std::vector<int>> path2;

  TwoPathSearch(const Graph& gg, int aa, int bb, int cc, int dd)
      : g(gg), a(aa), b(bb), c(cc), d(dd) {}

  bool prune(int cur, const VertexSet& unvisited) {
    VertexSet pool = unvisited;
    pool.insert(cur);
    for (int w = unvisited.first(); w >= 0; w = unvisited.next(w)) {
      if (w == b || w == c || w == d) continue;
      if (g.neighbors(w).intersection_size(pool) < 2) return false;
    }
    VertexSet no_tail = pool;
    no_tail.erase(c);
    no_tail.erase(d);
    if (!g.neighbors(b).intersects(no_tail - VertexSet::single(b))) return false;
    VertexSet second_pool = unvisited;
    second_pool.erase(b);
    if (!g.neighbors(c).intersects(second_pool - VertexSet::single(c))) return false;
    if (!g.neighbors(d).intersects(second_pool - VertexSet::single(d))) return false;
    // Everything left must split into at most the tail of the first path
    // (reaching b from cur) and the whole second path (holding c and d).
    VertexSet comp_cur = reach_within(g, cur, pool);
    if (!comp_cur.contains(b)) return false;
    if (comp_cur.contains(c) != comp_cur.contains(d)) return false;
    if (comp_cur.contains(c)) {
      if (!(pool - comp_cur).empty()) return false;
    } else {
      VertexSet comp_c = reach_within(g, c, pool - comp_cur);
      if (!comp_c.contains(d)) return false;
      if (!(pool - comp_cur - comp_c).empty()) return false;
    }
    return true;
  }

  bool extend1(int cur) {
    VertexSet unvisited = g.vertices() - used;
    if (!prune(cur, unvisited)) return false;
    VertexSet cand = g.neighbors(cur) & unvisited;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      if (v == c || v == d) continue;
      if (v == b) {
        VertexSet rest = unvisited;
        rest.erase(b);
        path2 = find_hamiltonian_path_within(g, rest, c, d);
        if (path2) {
          path1[len1] = b;
          return true;
        }
        continue;
      }
      used.insert(v);
      path1[len1++] = v;
      if (extend1(v)) return true;
      used.erase(v);
      --len1;
    }
    return false;
  }

  std::optional<std::pair<std::vector<int>, std::vector<int>>> run() {
    used = VertexSet::single(a);
    path1[0] = a;
    len1 = 1;
    if (!extend1(a)) return std::nullopt;
    return std::make_pair(std::vector<int>(path1.begin(), path1.begin() + len1 + 1),
                          *path2);
  }
};

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_two_spanning_paths(
    const Graph& g, std::pair<int, int> ab, std::pair<int, int> cd) {
  std::array<int, 4> ends{ab.first, ab.second, cd.first, cd.second};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ends[i] == ends[j])
        throw std::invalid_argument("two-path end-vertices must be pairwise distinct");
  if (g.vertex_count() < 4) return std::nullopt;
  TwoPathSearch search(g, ab.first, ab.second, cd.first, cd.second);
  auto res = search.run();
  if (res) {
    VertexSet s1, s2;
    for (int v : res->first) s1.insert(v);
    for (int v : res->second) s2.insert(v);
    check_path(g, s1, res->first, ab.first, ab.second);
    check_path(g, s2, res->second, cd.first, cd.second);
    if (s1.intersects(s2) || (s1 | s2) != g.vertices())
      throw std::logic_error("two spanning paths do not partition the vertices");
  }
  return res;
}

namespace {

// Vertex-deletion scan shared by classify and is_almost_hypohamiltonian.
struct DeletionScan {
  std::vector<int> bad;
  int good_count = 0;
  bool complete = true;
};

DeletionScan scan_deletions(const Graph& g, bool stop_at_two_bad,
                            std::map<int, std::vector<int>>* witnesses) {
  DeletionScan scan;
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    VertexSet rest = g.vertices();
    rest.erase(v);
    auto cyc = find_hamiltonian_cycle_within(g, rest);
    if (cyc) {
      ++scan.good_count;
      if (witnesses) (*witnesses)[v] = *cyc;
    } else {
      scan.bad.push_back(v);
    }
    if (stop_at_two_bad && scan.bad.size() >= 2 && scan.good_count >= 1) {
      scan.complete = v == n - 1;
      break;
    }
  }
  return scan;
}

}  // namespace

Classification classify(const Graph& g, const ClassifyOptions& options) {
  if (g.vertex_count() < 3) throw std::invalid_argument("classify requires n >= 3");
  if (!is_connected(g)) throw std::invalid_argument("classify requires a connected graph");

  Classification result;
  bool hamiltonian = is_hamiltonian(g);
  auto scan = scan_deletions(g, !hamiltonian && !options.full_bad_set,
                             options.retain_witnesses ? &result.witnesses : nullptr);
  result.hypocyclic = scan.complete && scan.bad.empty();
  for (int v : scan.bad) result.bad_set.insert(v);

  if (hamiltonian) {
    result.verdict = Verdict::Hamiltonian;
    result.bad_set.clear();
  } else if (scan.bad.empty()) {
    result.verdict = Verdict::Hypohamiltonian;
    result.bad_set.clear();
  } else if (scan.bad.size() == 1) {
    result.verdict = Verdict::AlmostHypohamiltonian;
    result.exceptional_vertex = scan.bad.front();
    result.bad_set.clear();
  } else if (scan.good_count >= 1 && is_k_connected(g, 2)) {
    // 2-connected, circumference n-1, at least two failing deletions.
    result.verdict = Verdict::KHypohamiltonian;
  } else {
    result.verdict = Verdict::Other;
    result.bad_set.clear();
  }
  return result;
}

std::optional<int> is_almost_hypohamiltonian(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return std::nullopt;
  if (is_hamiltonian(g)) return std::nullopt;
  int n = g.vertex_count();
  int w = -1;
  for (int v = 0; v < n; ++v) {
    VertexSet rest = g.vertices();
    rest.erase(v);
    if (!is_hamiltonian_within(g, rest)) {
      if (w >= 0) return std::nullopt;  // two failing deletions
      w = v;
    }
  }
  if (w < 0) return std::nullopt;  // hypohamiltonian
  return w;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Hamiltonian: return "hamiltonian";
    case Verdict::Hypohamiltonian: return "hypohamiltonian";
    case Verdict::AlmostHypohamiltonian: return "almost hypohamiltonian";
    case Verdict::KHypohamiltonian: return "k-hypohamiltonian";
    case Verdict::Other: return "other";
  }
  return "other";
}

}  // namespace ahgen
