#include "ahgen/generator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "ahgen/hamiltonicity.hpp"
#include "ahgen/obstructions.hpp"
#include "ahgen/planarity.hpp"

namespace ahgen {

namespace {

std::uint64_t rotate_mask(std::uint64_t m, int r, int len) {
  std::uint64_t mask = (len == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
  return ((m << r) | (m >> (len - r))) & mask;
}

std::uint64_t reverse_mask(std::uint64_t m, int len) {
  std::uint64_t out = 0;
  for (int i = 0; i < len; ++i)
    if (m & (std::uint64_t{1} << i)) out |= std::uint64_t{1} << (len - 1 - i);
  return out;
}

bool is_dihedral_minimum(std::uint64_t m, int len) {
  std::uint64_t rev = reverse_mask(m, len);
  for (int r = 0; r < len; ++r) {
    if (rotate_mask(m, r, len) < m) return false;
    if (rotate_mask(rev, r, len) < m) return false;
  }
  return true;
}

}  // namespace

std::vector<Graph> seed_graphs(int n, int degree) {
  int len = n - 1;
  if (degree < 3 || degree > len)
    throw std::invalid_argument("seed degree must satisfy 3 <= D <= n-1");
  if (len > 64) throw std::invalid_argument("seed enumeration is capped at n <= 65");
  std::vector<Graph> seeds;
  // Gosper's hack over len-bit masks of popcount `degree`.
  std::uint64_t m = (std::uint64_t{1} << degree) - 1;
  std::uint64_t limit = std::uint64_t{1} << len;
  while (m < limit) {
    if (is_dihedral_minimum(m, len)) {
      Graph g(n);
      for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
      for (int i = 0; i < len; ++i)
        if (m & (std::uint64_t{1} << i)) g.add_edge(len, i);
      seeds.push_back(std::move(g));
    }
    std::uint64_t c = m & (~m + 1);
    std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return seeds;
}

namespace {

// Concurrent insert-if-absent store of canonical keys, folded to 128-bit
// fingerprints (two independently seeded mixes). At 10^9 entries the
// collision probability is ~3e-21, far below hardware error rates, while the
// memory per visited class stays flat.
class KeyStore {
 public:
  bool insert(const std::string& key) {
    auto fp = fingerprint(key);
    auto& shard = shards_[fp.first % kShards];
    std::lock_guard<std::mutex> lock(shard.mu);
    return shard.keys.insert(fp).second;
  }
  void clear() {
    for (auto& shard : shards_) {
      std::lock_guard<std::mutex> lock(shard.mu);
      shard.keys.clear();
      shard.keys.rehash(0);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t h, const std::string& key) {
    for (unsigned char c : key) {
      h ^= c;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    h ^= h >> 32;
    return h;
  }
  static std::pair<std::uint64_t, std::uint64_t> fingerprint(const std::string& key) {
    return {mix(0xcbf29ce484222325ULL, key), mix(0x9e3779b97f4a7c15ULL, key)};
  }
  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
      return p.first ^ (p.second * 0x9e3779b97f4a7c15ULL);
    }
  };

  static constexpr int kShards = 64;
  struct Shard {
    std::mutex mu;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> keys;
  };
  Shard shards_[kShards];
};

struct Outputs {
  std::mutex mu;
  std::map<CanonicalKey, FoundGraph> found;

  // Returns true on first insertion.
  bool add(const CanonicalKey& key, const Graph& g, int w) {
    std::lock_guard<std::mutex> lock(mu);
    return found.emplace(key, FoundGraph{g, w, key}).second;
  }
  std::size_t size() {
    std::lock_guard<std::mutex> lock(mu);
    return found.size();
  }
};

struct SharedState {
  const GenConfig& cfg;
  KeyStore visited;  // cleared between degree regimes
  Outputs outputs;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> regime_nodes{0};
  std::atomic<std::uint64_t> regime_found{0};
  std::atomic<std::uint64_t> br_a{0}, br_deg2{0}, br_c{0}, br_tri{0}, br_b{0}, br_else{0};
  std::atomic<std::uint64_t> dup_hits{0}, ham_pruned{0};
  std::atomic<bool> abort{false};
  std::string abort_reason;
  std::mutex abort_mu;
  std::chrono::steady_clock::time_point t0;

  explicit SharedState(const GenConfig& c) : cfg(c), t0(std::chrono::steady_clock::now()) {}

  void request_abort(const std::string& reason) {
    std::lock_guard<std::mutex> lock(abort_mu);
    if (!abort.load()) {
      abort_reason = reason;
      abort.store(true);
    }
  }

  bool over_budget() {
    std::uint64_t seen = nodes.load(std::memory_order_relaxed);
    if (cfg.max_nodes && seen > *cfg.max_nodes) {
      request_abort("node cap exceeded");
      return true;
    }
    if (cfg.max_seconds && (seen & 255) == 0) {
      double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (elapsed > *cfg.max_seconds) {
        request_abort("time cap exceeded");
        return true;
      }
    }
    return false;
  }
};

// One worker's view of Algorithm 2 inside a fixed degree regime D.
struct Construct {
  SharedState& shared;
  const GenConfig& cfg;
  int degree_cap;
  Graph g;

  Construct(SharedState& s, int d, Graph seed)
      : shared(s), cfg(s.cfg), degree_cap(d), g(std::move(seed)) {}

  // At most one vertex of G+uv may have degree exceeding D.
  bool edge_allowed(int u, int v) const {
    if (g.has_edge(u, v)) return false;
    int over = 0;
    for (int x = 0; x < g.vertex_count(); ++x) {
      int d = g.degree(x) + (x == u || x == v ? 1 : 0);
      if (d > degree_cap && ++over > 1) return false;
    }
    return true;
  }

  bool girth_allows(int u, int v) const {
    if (cfg.min_girth <= 3) return true;
    return distance_at_least(g, u, v, cfg.min_girth - 1);
  }

  void recurse_on(const std::vector<std::pair<int, int>>& candidates) {
    for (auto [u, v] : candidates) {
      if (shared.abort.load(std::memory_order_relaxed)) return;
      if (!edge_allowed(u, v) || !girth_allows(u, v)) continue;
      // g is non-hamiltonian here, so g+uv is hamiltonian exactly when g has
      // a spanning u-v path; testing that anchored form at the parent skips
      // the child's canonical key entirely.
      if (find_hamiltonian_path(g, u, v)) {
        shared.ham_pruned.fetch_add(1, std::memory_order_relaxed);
        continue;
      }
      g.add_edge(u, v);
      run_nonhamiltonian();
      g.remove_edge(u, v);
    }
  }

  std::vector<std::pair<int, int>> all_non_edges() const {
    std::vector<std::pair<int, int>> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  void run() {
    if (is_hamiltonian(g)) {
      shared.ham_pruned.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    run_nonhamiltonian();
  }

  // Every graph entering here is non-hamiltonian.
  void run_nonhamiltonian() {
    if (shared.abort.load(std::memory_order_relaxed)) return;
    shared.nodes.fetch_add(1, std::memory_order_relaxed);
    shared.regime_nodes.fetch_add(1, std::memory_order_relaxed);
    if (shared.over_budget()) return;

    CanonicalKey key = canonical_key(g);
    if (!shared.visited.insert(key.bytes)) {
      shared.dup_hits.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    if (cfg.planar_only && !is_planar(g)) return;

    if (auto ob = find_type_A(g, cfg.obstruction_cap)) {
      shared.br_a.fetch_add(1, std::memory_order_relaxed);
      recurse_on(good_edges(g, *ob));
      return;
    }
    // A degree-2 vertex cannot survive into a 3-connected target, so some
    // edge at it must be added; branching over the edges at one such vertex
    // is complete and far narrower than expanding every non-edge. Pick the
    // degree-2 vertex with the fewest legal additions.
    int deg2_vertex = -1;
    std::size_t deg2_branch = ~std::size_t{0};
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 2) continue;
      std::size_t width = 0;
      for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v && edge_allowed(std::min(u, v), std::max(u, v)) && girth_allows(u, v))
          ++width;
      if (width < deg2_branch) {
        deg2_branch = width;
        deg2_vertex = v;
      }
    }
    if (deg2_vertex >= 0) {
      shared.br_deg2.fetch_add(1, std::memory_order_relaxed);
      std::vector<std::pair<int, int>> at_v;
      for (int u = 0; u < g.vertex_count(); ++u)
        if (u != deg2_vertex && !g.has_edge(u, deg2_vertex))
          at_v.emplace_back(std::min(u, deg2_vertex), std::max(u, deg2_vertex));
      recurse_on(at_v);
      return;
    }
    if (auto ob = find_type_C(g, cfg.obstruction_cap)) {
      shared.br_c.fetch_add(1, std::memory_order_relaxed);
      recurse_on(good_edges(g, *ob));
      return;
    }
    int cubic_triangle_vertex = -1;
    for (int v = 0; v < g.vertex_count() && cubic_triangle_vertex < 0; ++v) {
      if (g.degree(v) != 3) continue;
      VertexSet nb = g.neighbors(v);
      for (int x = nb.first(); x >= 0 && cubic_triangle_vertex < 0; x = nb.next(x))
        if (g.neighbors(x).intersects(nb)) cubic_triangle_vertex = v;
    }
    if (cubic_triangle_vertex >= 0) {
      shared.br_tri.fetch_add(1, std::memory_order_relaxed);
      std::vector<std::pair<int, int>> at_v;
      for (int u = 0; u < g.vertex_count(); ++u)
        if (u != cubic_triangle_vertex && !g.has_edge(u, cubic_triangle_vertex))
          at_v.emplace_back(std::min(u, cubic_triangle_vertex),
                            std::max(u, cubic_triangle_vertex));
      recurse_on(at_v);
      return;
    }
    if (auto ob = find_type_B(g, cfg.obstruction_cap)) {
      shared.br_b.fetch_add(1, std::memory_order_relaxed);
      recurse_on(good_edges(g, *ob));
      return;
    }

    shared.br_else.fetch_add(1, std::memory_order_relaxed);
    if (auto w = exceptional_vertex_of_nonhamiltonian()) {
      if (shared.outputs.add(key, g, *w)) {
        shared.regime_found.fetch_add(1, std::memory_order_relaxed);
        if (cfg.max_results && shared.outputs.size() >= *cfg.max_results)
          shared.request_abort("result cap reached");
      }
    }
    recurse_on(all_non_edges());
  }

  // The graph is already known non-hamiltonian here; scan the deletions.
  std::optional<int> exceptional_vertex_of_nonhamiltonian() const {
    int n = g.vertex_count();
    int w = -1;
    for (int v = 0; v < n; ++v) {
      VertexSet rest = g.vertices();
      rest.erase(v);
      if (!is_hamiltonian_within(g, rest)) {
        if (w >= 0) return std::nullopt;
        w = v;
      }
    }
    if (w < 0) return std::nullopt;
    return w;
  }
};

}  // namespace

RunReport generate(const GenConfig& cfg, const std::function<void(const FoundGraph&)>& sink) {
  if (cfg.n < 3) throw std::invalid_argument("generation requires n >= 3");
  if (cfg.min_girth < 3) throw std::invalid_argument("min_girth must be at least 3");
  if (cfg.thread_count < 1) throw std::invalid_argument("thread_count must be positive");

  RunReport report;
  report.n = cfg.n;
  report.min_girth = cfg.min_girth;
  report.planar_only = cfg.planar_only;

  SharedState shared(cfg);
  for (int d = 3; d <= cfg.n - 1 && !shared.abort.load(); ++d) {
    shared.visited.clear();
    shared.regime_nodes.store(0);
    shared.regime_found.store(0);
    auto seeds = seed_graphs(cfg.n, d);
    std::vector<Graph> usable;
    for (auto& s : seeds) {
      auto gi = girth(s);
      if (gi && *gi >= cfg.min_girth) usable.push_back(std::move(s));
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (!shared.abort.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1);
        if (i >= usable.size()) break;
        Construct c(shared, d, usable[i]);
        c.run();
      }
    };
    if (cfg.thread_count == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < cfg.thread_count; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    report.per_degree.push_back({d, usable.size(), shared.regime_nodes.load(),
                                 shared.regime_found.load()});
  }

  report.nodes_visited = shared.nodes.load();
  report.dedup_hits = shared.dup_hits.load();
  report.hamiltonian_pruned = shared.ham_pruned.load();
  report.branches = {shared.br_a.load(),   shared.br_deg2.load(), shared.br_c.load(),
                     shared.br_tri.load(), shared.br_b.load(),    shared.br_else.load()};
  report.completed = !shared.abort.load();
  report.abort_reason = shared.abort_reason;
  for (const auto& [key, fg] : shared.outputs.found) {
    ++report.graphs_found;
    bool cubic_w = fg.graph.degree(fg.exceptional_vertex) == 3;
    if (cubic_w) ++report.cubic_exceptional;
    if (!cfg.require_cubic_exceptional || cubic_w) sink(fg);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - shared.t0).count();
  return report;
}

namespace {

struct CubicGen {
  const int n;
  const int min_girth;
  const std::function<void(const Graph&)>& sink;
  Graph g;
  int used = 1;  // vertices 0..used-1 are part of the graph so far
  std::unordered_set<std::string> emitted;

  CubicGen(int nn, int girth_bound, const std::function<void(const Graph&)>& s)
      : n(nn), min_girth(girth_bound), sink(s), g(nn) {}

  void recurse(int active, int min_partner) {
    // `active` is the smallest unsaturated used vertex, filling its slots
    // with partners in increasing order starting from min_partner.
    if (active < 0) {
      for (int v = 0; v < used; ++v)
        if (g.degree(v) < 3) {
          active = v;
          break;
        }
      if (active < 0) {
        if (used < n) return;  // saturated proper subgraph: dead branch
        auto key = canonical_key(g);
        if (emitted.insert(key.bytes).second) sink(g);
        return;
      }
      min_partner = active + 1;
    }
    if (g.degree(active) == 3) {
      recurse(-1, 0);
      return;
    }
    int partner_limit = std::min(used, n - 1);  // allow one fresh vertex: index `used`
    for (int u = min_partner; u <= partner_limit; ++u) {
      bool fresh = u == used;
      if (!fresh && (g.degree(u) >= 3 || g.has_edge(active, u))) continue;
      if (!fresh && min_girth > 3 && !distance_at_least(g, active, u, min_girth - 1))
        continue;
      if (fresh) ++used;
      g.add_edge(active, u);
      recurse(active, u + 1);
      g.remove_edge(active, u);
      if (fresh) --used;
    }
  }
};

}  // namespace

void brute_cubic_graphs(int n, int min_girth,
                        const std::function<void(const Graph&)>& sink) {
  if (n % 2 != 0) throw std::invalid_argument("cubic graphs have even order");
  if (n < 4 || n > 20)
    throw std::invalid_argument("brute cubic generation is capped at 4 <= n <= 20");
  CubicGen gen(n, std::max(min_girth, 3), sink);
  gen.recurse(-1, 0);
}

}  // namespace ahgen
