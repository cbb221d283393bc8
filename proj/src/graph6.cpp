#include "ahgen/graph6.hpp"

#include <cstdint>

namespace ahgen {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  auto byte = static_cast<unsigned char>(c);
  if (byte < 63 || byte > 126) throw Graph6Error("graph6 character out of range");
  return byte - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = decode_char(line[pos++]);
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw Graph6Error("truncated graph6 length prefix");
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | decode_char(line[pos++]);
  } else {
    if (line.size() < 8) throw Graph6Error("truncated graph6 length prefix");
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | decode_char(line[pos++]);
  }
  if (n > static_cast<std::uint64_t>(kMaxVertices))
    throw Graph6Error("graph6 order exceeds supported maximum");

  int nn = static_cast<int>(n);
  std::uint64_t nbits = static_cast<std::uint64_t>(nn) * (nn - 1) / 2;
  std::uint64_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos != nbytes) throw Graph6Error("graph6 body has wrong length");

  Graph g(nn);
  std::uint64_t k = 0;
  for (int col = 1; col < nn; ++col) {
    for (int row = 0; row < col; ++row, ++k) {
      int c = decode_char(line[pos + k / 6]);
      if (c & (1 << (5 - k % 6))) g.add_edge(row, col);
    }
  }
  // Padding bits of the final character must be zero.
  if (nbits % 6 != 0) {
    int last = decode_char(line[pos + nbytes - 1]);
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw Graph6Error("nonzero trailing bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("write_graph6 requires at least one vertex");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, have = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        have = 0;
      }
    }
  }
  if (have > 0) out.push_back(static_cast<char>((acc << (6 - have)) + 63));
  return out;
}

}  // namespace ahgen
