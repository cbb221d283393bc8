#include "ahgen/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

#include "ahgen/graph6.hpp"

namespace ahgen {

namespace {

// Ordered partition of 0..n-1 kept in flat arrays: `order` lists the
// vertices cell by cell, `cell_of` maps a vertex to its cell index, and
// cells are [start[c], start[c] + len[c]).
struct Partition {
  std::array<std::uint8_t, kMaxVertices> order;
  std::array<std::uint8_t, kMaxVertices> pos;  // inverse of order
  std::array<std::uint8_t, kMaxVertices> start;
  std::array<std::uint8_t, kMaxVertices> len;
  int cells = 0;

  void init_unit(int n) {
    cells = 1;
    start[0] = 0;
    len[0] = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) {
      order[i] = static_cast<std::uint8_t>(i);
      pos[i] = static_cast<std::uint8_t>(i);
    }
  }
};

constexpr int kQueueSize = kMaxVertices + 1;

struct CanonSearch {
  const Graph& g;
  int n;

  std::array<std::uint8_t, 1 + kMaxVertices * (kMaxVertices - 1) / 16> best_cert{};
  int cert_len = 0;
  std::array<int, kMaxVertices> best_lab{};
  bool have_best = false;

  static constexpr int kAutoCap = 128;
  std::vector<std::array<std::uint8_t, kMaxVertices>> autos;
  std::array<int, kMaxVertices> prefix{};
  int prefix_len = 0;

  explicit CanonSearch(const Graph& gg) : g(gg), n(gg.vertex_count()) {
    cert_len = 1 + (n * (n - 1) / 2 + 7) / 8;
  }

  // Split every cell by neighbour counts against pending splitter cells
  // until the partition is equitable. Subcells are ordered by ascending
  // count, so the procedure commutes with relabeling.
  void refine(Partition& p) const {
    std::array<std::uint8_t, kQueueSize> queue;
    std::array<bool, kMaxVertices> queued{};
    int qhead = 0, qtail = 0;
    for (int c = 0; c < p.cells; ++c) {
      queue[qtail++] = static_cast<std::uint8_t>(c);
      queued[c] = true;
    }
    std::array<std::uint8_t, kMaxVertices> cnt;
    while (qhead != qtail) {
      int sc = queue[qhead];
      qhead = (qhead + 1) % kQueueSize;
      queued[sc] = false;
      VertexSet splitter;
      for (int i = 0; i < p.len[sc]; ++i) splitter.insert(p.order[p.start[sc] + i]);

      for (int c = 0; c < p.cells; ++c) {
        int clen = p.len[c];
        if (clen <= 1) continue;
        int base = p.start[c];
        int lo = 255, hi = -1;
        for (int i = 0; i < clen; ++i) {
          int v = p.order[base + i];
          cnt[v] = static_cast<std::uint8_t>(
              g.neighbors(v).intersection_size(splitter));
          lo = std::min<int>(lo, cnt[v]);
          hi = std::max<int>(hi, cnt[v]);
        }
        if (lo == hi) continue;
        // Counting sort of the cell by cnt, stable.
        std::array<std::uint8_t, kMaxVertices> tmp;
        std::array<int, kMaxVertices + 1> bucket{};
        for (int i = 0; i < clen; ++i) ++bucket[cnt[p.order[base + i]] + 1];
        for (int k = lo; k <= hi; ++k) bucket[k + 1] += bucket[k];
        for (int i = 0; i < clen; ++i) {
          int v = p.order[base + i];
          tmp[bucket[cnt[v]]++] = static_cast<std::uint8_t>(v);
        }
        std::memcpy(&p.order[base], &tmp[0], clen);

        // Carve the cell into subcells; shift bookkeeping for the new ones.
        int new_cells = 0;
        for (int k = lo; k <= hi; ++k)
          if ((k == lo ? bucket[k] : bucket[k] - bucket[k - 1]) > 0) ++new_cells;
        int shift = new_cells - 1;
        if (shift > 0) {
          for (int c2 = p.cells - 1; c2 > c; --c2) {
            p.start[c2 + shift] = p.start[c2];
            p.len[c2 + shift] = p.len[c2];
            if (queued[c2]) {
              queued[c2 + shift] = true;
              queued[c2] = false;
              for (int qi = qhead; qi != qtail; qi = (qi + 1) % kQueueSize)
                if (queue[qi] == c2) queue[qi] = static_cast<std::uint8_t>(c2 + shift);
            }
          }
          p.cells += shift;
        }
        int at = base, cell_idx = c;
        int prev_end = 0;
        for (int k = lo; k <= hi; ++k) {
          int end = bucket[k];
          int sz = end - prev_end;
          if (sz == 0) continue;
          p.start[cell_idx] = static_cast<std::uint8_t>(at);
          p.len[cell_idx] = static_cast<std::uint8_t>(sz);
          // Every new subcell except one (the largest would be optimal; the
          // first is simplest and still correct) goes back on the queue.
          if (!queued[cell_idx] && (cell_idx != c || k != lo)) {
            queue[qtail] = static_cast<std::uint8_t>(cell_idx);
            qtail = (qtail + 1) % kQueueSize;
            queued[cell_idx] = true;
          }
          at += sz;
          ++cell_idx;
          prev_end = end;
        }
        for (int i = 0; i < clen; ++i) {
          int v = p.order[base + i];
          p.pos[v] = static_cast<std::uint8_t>(base + i);
        }
      }
    }
  }

  void leaf_cert(const Partition& p, std::uint8_t* cert) const {
    // order[i] is the vertex with new label i.
    cert[0] = static_cast<std::uint8_t>(n);
    int acc = 0, have = 0, at = 1;
    for (int col = 1; col < n; ++col) {
      const VertexSet& nb = g.neighbors(p.order[col]);
      for (int row = 0; row < col; ++row) {
        acc = (acc << 1) | (nb.contains(p.order[row]) ? 1 : 0);
        if (++have == 8) {
          cert[at++] = static_cast<std::uint8_t>(acc);
          acc = 0;
          have = 0;
        }
      }
    }
    if (have) cert[at++] = static_cast<std::uint8_t>(acc << (8 - have));
  }

  bool is_automorphism(const std::array<std::uint8_t, kMaxVertices>& phi) const {
    for (int u = 0; u < n; ++u) {
      VertexSet mapped;
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v))
        mapped.insert(phi[v]);
      if (!(mapped == g.neighbors(phi[u]))) return false;
    }
    return true;
  }

  void record_automorphism(const Partition& leaf) {
    if (static_cast<int>(autos.size()) >= kAutoCap) return;
    // phi = leaf_labelling^{-1} o best_labelling (old -> old).
    std::array<std::uint8_t, kMaxVertices> phi{};
    for (int v = 0; v < n; ++v) phi[v] = leaf.order[best_lab[v]];
    if (!is_automorphism(phi))
      throw std::logic_error("canonical labeling produced an invalid automorphism");
    std::array<std::uint8_t, kMaxVertices> inv{};
    for (int v = 0; v < n; ++v) inv[phi[v]] = static_cast<std::uint8_t>(v);
    autos.push_back(phi);
    if (static_cast<int>(autos.size()) < kAutoCap) autos.push_back(inv);
  }

  void dfs(Partition p) {
    refine(p);
    int target = -1;
    for (int c = 0; c < p.cells; ++c)
      if (p.len[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::array<std::uint8_t, sizeof best_cert> cert;
      leaf_cert(p, cert.data());
      int cmp = have_best ? std::memcmp(cert.data(), best_cert.data(), cert_len) : -1;
      if (cmp < 0) {
        std::memcpy(best_cert.data(), cert.data(), cert_len);
        for (int i = 0; i < n; ++i) best_lab[p.order[i]] = i;
        have_best = true;
      } else if (cmp == 0) {
        record_automorphism(p);
      }
      return;
    }

    // Individualize each vertex of the target cell, skipping those mapped to
    // an already-processed sibling by an automorphism fixing the path here.
    int base = p.start[target], tlen = p.len[target];
    std::array<std::uint8_t, kMaxVertices> cands;
    std::memcpy(cands.data(), &p.order[base], tlen);
    std::sort(cands.begin(), cands.begin() + tlen);
    VertexSet done;
    for (int i = 0; i < tlen; ++i) {
      int v = cands[i];
      bool skip = false;
      for (const auto& phi : autos) {
        bool fixes = true;
        for (int k = 0; k < prefix_len && fixes; ++k)
          if (phi[prefix[k]] != prefix[k]) fixes = false;
        if (fixes && done.contains(phi[v])) {
          skip = true;
          break;
        }
      }
      if (!skip) {
        Partition child = p;
        // Move v to the front of its cell and split off a singleton.
        int vp = child.pos[v];
        int other = child.order[base];
        child.order[base] = static_cast<std::uint8_t>(v);
        child.order[vp] = static_cast<std::uint8_t>(other);
        child.pos[v] = static_cast<std::uint8_t>(base);
        child.pos[other] = static_cast<std::uint8_t>(vp);
        for (int c2 = child.cells - 1; c2 > target; --c2) {
          child.start[c2 + 1] = child.start[c2];
          child.len[c2 + 1] = child.len[c2];
        }
        ++child.cells;
        child.start[target] = static_cast<std::uint8_t>(base);
        child.len[target] = 1;
        child.start[target + 1] = static_cast<std::uint8_t>(base + 1);
        child.len[target + 1] = static_cast<std::uint8_t>(tlen - 1);
        prefix[prefix_len++] = v;
        dfs(child);
        --prefix_len;
      }
      done.insert(v);
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {};
  CanonSearch search(g);
  Partition p;
  p.init_unit(n);
  search.dfs(p);
  return {search.best_lab.begin(), search.best_lab.begin() + n};
}

Graph relabel(const Graph& g, const std::vector<int>& labeling) {
  Graph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(labeling[u], labeling[v]);
  return h;
}

CanonicalKey canonical_key(const Graph& g) {
  if (g.vertex_count() < 1)
    throw std::invalid_argument("canonical_key requires at least one vertex");
  return CanonicalKey{write_graph6(relabel(g, canonical_labeling(g)))};
}

}  // namespace ahgen
