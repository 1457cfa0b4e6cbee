// SPDX-License-Identifier: Apache-2.0

#include "wordrep/graph6.hpp"

namespace wordrep {

namespace {

constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  char head = text[0];
  if (head == 126) {
    throw ParseError("long-form graph6 header (n > 62) is not supported", 0);
  }
  if (!printable(head)) throw ParseError("malformed graph6 header byte", 0);
  int n = head - kBias;

  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t expected = 1 + (bits + 5) / 6;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!printable(text[i])) throw ParseError("character out of range", i);
  }
  if (text.size() < expected) {
    throw ParseError("truncated graph6 bit field", text.size());
  }
  if (text.size() > expected) {
    throw ParseError("trailing bytes after graph6 bit field", expected);
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = text[1 + k / 6] - kBias;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (bits % 6 != 0) {
    int last = text[expected - 1] - kBias;
    int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw ParseError("non-zero padding bits", expected - 1);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw std::out_of_range("graph6 short form supports at most 62 vertices, got " +
                            std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + kBias));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace wordrep
