#ifndef AHGEN_VERTEX_SET_HPP
#define AHGEN_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstdint>

namespace ahgen {

// Hard upper bound on the number of vertices. Everything in this project is
// desk scale (the paper's constructions stay below 80 vertices), so vertex
// sets fit in two machine words and set operations are branch-free.
inline constexpr int kMaxVertices = 128;

class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  // {0, 1, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    VertexSet s;
    if (n >= 64) {
      s.w_[0] = ~std::uint64_t{0};
      s.w_[1] = (n == 128) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else {
      s.w_[0] = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return s;
  }

  constexpr void insert(int v) { w_[v >> 6] |= bit(v); }
  constexpr void erase(int v) { w_[v >> 6] &= ~bit(v); }
  constexpr bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
  constexpr void clear() { w_ = {0, 0}; }

  int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }

  // Smallest element, or -1 when empty.
  int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // Smallest element strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    std::uint64_t rest = w_[v >> 6] >> (v & 63);
    if (rest) return v + std::countr_zero(rest);
    if (v < 64 && w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr VertexSet& operator-=(const VertexSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    return (w_[0] & o.w_[0]) | (w_[1] & o.w_[1]);
  }
  int intersection_size(const VertexSet& o) const {
    return std::popcount(w_[0] & o.w_[0]) + std::popcount(w_[1] & o.w_[1]);
  }
  bool is_subset_of(const VertexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  friend constexpr bool operator==(const VertexSet& a, const VertexSet& b) = default;

  std::uint64_t word(int i) const { return w_[i]; }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }
  std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace ahgen

#endif
