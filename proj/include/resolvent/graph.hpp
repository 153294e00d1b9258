#pragma once

// Simple undirected graphs on at most 64 vertices, stored as one adjacency
// bit row per vertex, plus the elementary subgraph counts used by the
// characteristic-polynomial coefficient checks.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resolvent/error.hpp"

namespace resolvent {

class Graph {
 public:
  static constexpr int max_order = 64;

  Graph() = default;

  explicit Graph(int n) : rows_(check_order(n), 0) {}

  Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(rows_.size()); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1U;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_parameter("self-loop at vertex " + std::to_string(u));
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }

  /// Neighbourhood of v as a bit mask.
  std::uint64_t row(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  int degree(int v) const { return std::popcount(row(v)); }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (std::uint64_t r = row(v); r; r &= r - 1) out.push_back(std::countr_zero(r));
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (std::uint64_t r = rows_[u] & ~low_mask(u + 1); r; r &= r - 1)
        out.emplace_back(u, std::countr_zero(r));
    return out;
  }

  /// Relabel: vertex v of *this becomes perm[v] in the result.
  Graph permuted(std::span<const int> perm) const {
    Graph g(order());
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
  }

  /// Induced subgraph on the vertices whose bit is clear in `removed`;
  /// survivors keep their relative order.
  Graph without(std::uint64_t removed) const {
    std::vector<int> index(static_cast<std::size_t>(order()), -1);
    int k = 0;
    for (int v = 0; v < order(); ++v)
      if (!((removed >> v) & 1U)) index[v] = k++;
    Graph g;
    g.rows_.assign(static_cast<std::size_t>(k), 0);
    for (auto [u, v] : edges())
      if (index[u] >= 0 && index[v] >= 0) g.add_edge(index[u], index[v]);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  static constexpr std::uint64_t low_mask(int k) {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  }

 private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > max_order)
      throw invalid_parameter("graph order " + std::to_string(n) + " outside 0.." +
                              std::to_string(max_order));
    return static_cast<std::size_t>(n);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= order())
      throw invalid_parameter("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(order()));
  }

  std::vector<std::uint64_t> rows_;
};

// Standard small graphs.

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw invalid_parameter("cycle needs at least 3 vertices, got " + std::to_string(n));
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// ---------------------------------------------------------------------------
// Elementary invariants

inline long edge_count(const Graph& g) {
  long twice = 0;
  for (int v = 0; v < g.order(); ++v) twice += g.degree(v);
  return twice / 2;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::uint64_t seen = Graph::bit(0), frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == Graph::low_mask(g.order());
}

/// m - n + 1; only meaningful for connected graphs.
inline long cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) throw structural_error("cyclomatic number requires a connected graph");
  return edge_count(g) - g.order() + 1;
}

inline long triangle_count(const Graph& g) {
  long t = 0;
  for (auto [u, v] : g.edges()) t += std::popcount(g.row(u) & g.row(v) & ~Graph::low_mask(v + 1));
  return t;
}

/// Unordered pairs of vertex-disjoint edges.
inline long two_matching_count(const Graph& g) {
  const long m = edge_count(g);
  long adjacent_pairs = 0;  // pairs sharing a vertex
  for (int v = 0; v < g.order(); ++v) {
    const long d = g.degree(v);
    adjacent_pairs += d * (d - 1) / 2;
  }
  return m * (m - 1) / 2 - adjacent_pairs;
}

/// Number of 4-cycles (as subgraphs).
inline long quadrilateral_count(const Graph& g) {
  // Each C4 has two diagonals; count common-neighbour pairs per vertex pair.
  long twice = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int w = u + 1; w < g.order(); ++w) {
      const long c = std::popcount(g.row(u) & g.row(w));
      twice += c * (c - 1) / 2;
    }
  return twice / 2;
}

/// Sachs coefficient of λ^{n-4}: 2-matchings minus twice the 4-cycles.
inline long b2_coefficient(const Graph& g) { return two_matching_count(g) - 2 * quadrilateral_count(g); }

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace resolvent
