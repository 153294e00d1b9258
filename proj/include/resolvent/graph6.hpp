#pragma once

// graph6 interchange format, short form only (n <= 62).
//
// Layout: one byte n+63, then the upper triangle of the adjacency matrix in
// column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits
// per byte big-end first, zero padded, each byte offset by 63.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "resolvent/error.hpp"
#include "resolvent/graph.hpp"

namespace resolvent {

inline constexpr int graph6_max_order = 62;

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > graph6_max_order)
    throw invalid_parameter("graph6 long form (n > 62) is not supported, got n=" + std::to_string(n));
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw parse_error("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw parse_error("byte outside graph6 range 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > graph6_max_order) throw parse_error("graph6 long form (n > 62) is not supported", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t want = 1 + (bits + 5) / 6;
  if (text.size() != want)
    throw parse_error("graph6 length " + std::to_string(text.size()) + " does not match n=" +
                          std::to_string(n) + " (expected " + std::to_string(want) + ")",
                      std::min(text.size(), want));
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw parse_error("nonzero graph6 padding bits", text.size() - 1);
  }
  return g;
}

/// Newline-delimited graph6 records; blank lines are skipped. Parse errors
/// report the byte offset within the whole stream.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t base = 0;
  while (std::getline(in, line)) {
    const std::size_t len = line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      try {
        out.push_back(graph6_decode(line));
      } catch (const parse_error& e) {
        throw parse_error("bad graph6 record", base + e.offset());
      }
    }
    base += len;
  }
  return out;
}

inline void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace resolvent
