#include "ahgen/planarity.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

namespace ahgen {

namespace {

// Biconnected components as edge lists (Hopcroft–Tarjan).
std::vector<std::vector<std::pair<int, int>>> blocks_of(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;

  struct Frame {
    int v;
    int next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& frame = stack.back();
      int v = frame.v;
      int u = frame.next < 0 ? g.neighbors(v).first() : g.neighbors(v).next(frame.next);
      if (u >= 0) {
        frame.next = u;
        if (disc[u] < 0) {
          edge_stack.emplace_back(v, u);
          disc[u] = low[u] = timer++;
          parent[u] = v;
          stack.push_back({u, -1});
        } else if (u != parent[v] && disc[u] < disc[v]) {
          edge_stack.emplace_back(v, u);
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            std::vector<std::pair<int, int>> block;
            while (!edge_stack.empty()) {
              auto e = edge_stack.back();
              if (disc[e.first] < disc[v] && e != std::make_pair(p, v)) break;
              edge_stack.pop_back();
              block.push_back(e);
              if (e == std::make_pair(p, v)) break;
            }
            blocks.push_back(std::move(block));
          }
        }
      }
    }
  }
  return blocks;
}

// Demoucron-Malgrange-Pertuiset planarity / embedding for a 2-connected
// block, given as an edge list. Returns the facial walks (oriented,
// consistent) or nullopt when the block is non-planar.
std::optional<std::vector<std::vector<int>>> dmp_faces(
    const std::vector<std::pair<int, int>>& block_edges) {
  Graph b(kMaxVertices);
  VertexSet verts;
  for (auto [u, v] : block_edges) {
    b.add_edge(u, v);
    verts.insert(u);
    verts.insert(v);
  }
  int nb = verts.size();
  int mb = static_cast<int>(block_edges.size());
  if (mb > 3 * nb - 6) return std::nullopt;

  // Initial cycle by walking from a vertex until a repeat.
  std::vector<int> cycle;
  {
    std::array<int, kMaxVertices> on_path{};
    std::vector<int> path{verts.first()};
    on_path[path[0]] = 1;
    int prev = -1;
    while (true) {
      int v = path.back();
      int next = -1;
      for (int u = b.neighbors(v).first(); u >= 0; u = b.neighbors(v).next(u))
        if (u != prev) {
          next = u;
          break;
        }
      if (on_path[next]) {
        auto it = std::find(path.begin(), path.end(), next);
        cycle.assign(it, path.end());
        break;
      }
      on_path[next] = 1;
      prev = v;
      path.push_back(next);
    }
  }

  std::vector<std::vector<int>> faces{cycle, {cycle.rbegin(), cycle.rend()}};
  Graph embedded(kMaxVertices);
  VertexSet embedded_verts;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    embedded.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    embedded_verts.insert(cycle[i]);
  }

  struct Fragment {
    VertexSet contacts;
    std::vector<int> path;  // contact ... contact (interior outside H)
  };

  while (embedded.edge_count() < mb) {
    // Collect fragments: chords between embedded vertices, and bridges
    // hanging off components of the unembedded part.
    std::vector<Fragment> fragments;
    for (auto [u, v] : block_edges) {
      if (embedded.has_edge(u, v)) continue;
      if (embedded_verts.contains(u) && embedded_verts.contains(v)) {
        Fragment f;
        f.contacts.insert(u);
        f.contacts.insert(v);
        f.path = {u, v};
        fragments.push_back(std::move(f));
      }
    }
    for (const auto& comp : components_within(b, verts - embedded_verts)) {
      Fragment f;
      for (int v = comp.first(); v >= 0; v = comp.next(v))
        f.contacts |= b.neighbors(v) & embedded_verts;
      // Path between two contacts through the component: BFS from one
      // contact, through comp, to any other contact.
      int c1 = f.contacts.first();
      std::array<int, kMaxVertices> pred{};
      pred.fill(-2);
      pred[c1] = -1;
      std::vector<int> queue{c1};
      int hit = -1;
      for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
        int v = queue[qi];
        if (v != c1 && !comp.contains(v)) continue;  // other contacts end the path
        for (int u = b.neighbors(v).first(); u >= 0; u = b.neighbors(v).next(u)) {
          if (pred[u] != -2) continue;
          if (!comp.contains(u) && !(f.contacts.contains(u) && u != c1)) continue;
          if (v == c1 && embedded.has_edge(v, u)) continue;
          pred[u] = v;
          if (f.contacts.contains(u)) {
            hit = u;
            break;
          }
          queue.push_back(u);
        }
      }
      for (int v = hit; v >= 0; v = pred[v]) f.path.push_back(v);
      std::reverse(f.path.begin(), f.path.end());
      fragments.push_back(std::move(f));
    }

    // Admissible faces per fragment; a fragment with none kills planarity,
    // one with a unique choice is embedded first.
    int pick = -1, pick_face = -1, pick_count = 0;
    for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
      int count = 0, first_face = -1;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        VertexSet fv;
        for (int v : faces[i]) fv.insert(v);
        if (fragments[fi].contacts.is_subset_of(fv)) {
          ++count;
          if (first_face < 0) first_face = static_cast<int>(i);
        }
      }
      if (count == 0) return std::nullopt;
      if (pick < 0 || count < pick_count) {
        pick = static_cast<int>(fi);
        pick_face = first_face;
        pick_count = count;
      }
    }

    const auto& frag = fragments[pick];
    const auto& path = frag.path;
    std::vector<int> face = faces[pick_face];
    int L = static_cast<int>(face.size());
    int pi = static_cast<int>(std::find(face.begin(), face.end(), path.front()) -
                              face.begin());
    int pj = static_cast<int>(std::find(face.begin(), face.end(), path.back()) -
                              face.begin());
    std::vector<int> arc1, arc2;
    for (int t = pi;; t = (t + 1) % L) {
      arc1.push_back(face[t]);
      if (t == pj) break;
    }
    for (int t = pj;; t = (t + 1) % L) {
      arc2.push_back(face[t]);
      if (t == pi) break;
    }
    std::vector<int> f1 = arc1, f2 = arc2;
    for (auto it = path.rbegin() + 1; it != path.rend() - 1; ++it) f1.push_back(*it);
    for (auto it = path.begin() + 1; it != path.end() - 1; ++it) f2.push_back(*it);
    faces[pick_face] = std::move(f1);
    faces.push_back(std::move(f2));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      embedded.add_edge(path[i], path[i + 1]);
      embedded_verts.insert(path[i]);
      embedded_verts.insert(path[i + 1]);
    }
  }
  return faces;
}

}  // namespace

int PlaneEmbedding::edge_count() const {
  int total = 0;
  for (const auto& f : faces) total += static_cast<int>(f.size());
  return total / 2;
}

bool is_planar(const Graph& g) {
  for (const auto& block : blocks_of(g)) {
    if (block.size() < 3) continue;  // an edge or a triangle is always planar
    if (!dmp_faces(block)) return false;
  }
  return true;
}

PlaneEmbedding embed(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot embed the empty graph");
  if (!is_connected(g)) throw std::invalid_argument("embedding requires a connected graph");

  PlaneEmbedding emb;
  emb.rotation.assign(n, {});
  if (n == 1) {
    emb.faces.push_back({0});
    emb.face_degrees[0] = 1;
    return emb;
  }

  // Per-block rotations, concatenated at cut vertices.
  for (const auto& block : blocks_of(g)) {
    if (block.size() == 1) {
      emb.rotation[block[0].first].push_back(block[0].second);
      emb.rotation[block[0].second].push_back(block[0].first);
      continue;
    }
    auto faces = dmp_faces(block);
    if (!faces) throw NonPlanarError("graph is not planar");
    // Face successor map: directed edge (u -> v) followed by (v -> w) in some
    // facial walk; its cycles at v give the rotation.
    std::map<std::pair<int, int>, int> succ;
    for (const auto& walk : *faces) {
      int len = static_cast<int>(walk.size());
      for (int i = 0; i < len; ++i) {
        int u = walk[i], v = walk[(i + 1) % len], w = walk[(i + 2) % len];
        succ[{u, v}] = w;
      }
    }
    VertexSet verts;
    for (auto [u, v] : block) {
      verts.insert(u);
      verts.insert(v);
    }
    for (int v = verts.first(); v >= 0; v = verts.next(v)) {
      std::vector<int> cycle;
      VertexSet nb;
      for (auto [a, bvert] : block) {
        if (a == v) nb.insert(bvert);
        if (bvert == v) nb.insert(a);
      }
      int u = nb.first();
      for (int i = 0; i < nb.size(); ++i) {
        cycle.push_back(u);
        u = succ.at({u, v});
      }
      for (int x : cycle) emb.rotation[v].push_back(x);
    }
  }

  // Trace all faces of the merged rotation system.
  std::vector<std::vector<int>> pos(n);
  for (int v = 0; v < n; ++v) {
    pos[v].assign(n, -1);
    for (std::size_t i = 0; i < emb.rotation[v].size(); ++i)
      pos[v][emb.rotation[v][i]] = static_cast<int>(i);
  }
  std::set<std::pair<int, int>> traced;
  for (int v = 0; v < n; ++v) {
    for (int u : emb.rotation[v]) {
      if (traced.count({v, u})) continue;
      std::vector<int> walk;
      int a = v, bvert = u;
      while (!traced.count({a, bvert})) {
        traced.insert({a, bvert});
        walk.push_back(a);
        int deg = static_cast<int>(emb.rotation[bvert].size());
        int next = emb.rotation[bvert][(pos[bvert][a] + 1) % deg];
        a = bvert;
        bvert = next;
      }
      emb.faces.push_back(std::move(walk));
    }
  }
  for (const auto& f : emb.faces) ++emb.face_degrees[static_cast<int>(f.size())];

  int f = static_cast<int>(emb.faces.size());
  if (n - g.edge_count() + f != 2)
    throw std::logic_error("embedding violates Euler's relation");
  return emb;
}

bool grinberg_verify(const PlaneEmbedding& emb, const std::vector<int>& cycle) {
  int n = emb.vertex_count();
  if (static_cast<int>(cycle.size()) != n)
    throw std::invalid_argument("cycle does not span the embedded graph");
  std::set<std::pair<int, int>> cycle_edges;
  VertexSet seen;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (seen.contains(u)) throw std::invalid_argument("cycle repeats a vertex");
    seen.insert(u);
    const auto& rot = emb.rotation[u];
    if (std::find(rot.begin(), rot.end(), v) == rot.end())
      throw std::invalid_argument("cycle uses a missing edge");
    cycle_edges.insert({std::min(u, v), std::max(u, v)});
  }

  // Faces sharing an edge not on the cycle lie on the same side.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (std::size_t i = 0; i < emb.faces.size(); ++i) {
    const auto& walk = emb.faces[i];
    for (std::size_t t = 0; t < walk.size(); ++t) {
      int u = walk[t], v = walk[(t + 1) % walk.size()];
      edge_faces[{std::min(u, v), std::max(u, v)}].push_back(static_cast<int>(i));
    }
  }
  std::vector<int> root(emb.faces.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [e, fs] : edge_faces) {
    if (cycle_edges.count(e)) continue;
    if (fs.size() == 2) root[find(fs[0])] = find(fs[1]);
  }
  std::set<int> groups;
  for (std::size_t i = 0; i < root.size(); ++i) groups.insert(find(static_cast<int>(i)));
  if (groups.size() != 2)
    throw std::invalid_argument("cycle does not split the faces into two sides");
  int inside_group = *groups.begin();
  long long sum = 0;
  for (std::size_t i = 0; i < emb.faces.size(); ++i) {
    int sz = static_cast<int>(emb.faces[i].size());
    sum += static_cast<long long>(sz - 2) * (find(static_cast<int>(i)) == inside_group ? 1 : -1);
  }
  return sum == 0;
}

GrinbergCertificate grinberg_certify_nonhamiltonian(const PlaneEmbedding& emb) {
  // Feasibility of sum (i-2)(2 f_i - F_i) = 0 with 0 <= f_i <= F_i, i.e.
  // sum (i-2) f_i = m - f by Euler. Solved by a reachability sweep over the
  // distinct face sizes.
  int m = emb.edge_count();
  int target = m - static_cast<int>(emb.faces.size());
  GrinbergCertificate cert;
  if (target < 0) {
    cert.outcome = GrinbergCertificate::Outcome::NonHamiltonian;
    return cert;
  }
  std::vector<std::pair<int, int>> sizes(emb.face_degrees.begin(), emb.face_degrees.end());
  std::vector<std::vector<char>> reach(sizes.size() + 1,
                                       std::vector<char>(target + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto [size, count] = sizes[i];
    int weight = size - 2;
    for (int t = 0; t <= target; ++t) {
      if (!reach[i][t]) continue;
      for (int take = 0; take <= count; ++take) {
        long long nt = t + static_cast<long long>(weight) * take;
        if (nt > target) break;
        reach[i + 1][nt] = 1;
        if (weight == 0) break;  // digons contribute nothing
      }
    }
  }
  if (!reach[sizes.size()][target]) {
    cert.outcome = GrinbergCertificate::Outcome::NonHamiltonian;
    return cert;
  }
  cert.outcome = GrinbergCertificate::Outcome::Inconclusive;
  int t = target;
  for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
    auto [size, count] = sizes[i];
    int weight = size - 2;
    for (int take = 0; take <= count; ++take) {
      long long prev = t - static_cast<long long>(weight) * take;
      if (prev >= 0 && reach[i][prev]) {
        cert.inside_counts[size] = take;
        t = static_cast<int>(prev);
        break;
      }
      if (weight == 0) break;
    }
  }
  return cert;
}

}  // namespace ahgen
