#pragma once

// Exact characteristic polynomials and the exact resolvent energy
// ER(G) = phi'(G, n) / phi(G, n).

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resolvent/bigint.hpp"
#include "resolvent/error.hpp"
#include "resolvent/graph.hpp"
#include "resolvent/graph6.hpp"
#include "resolvent/polynomial.hpp"

namespace resolvent {

/// det(xI - A) by the Faddeev-LeVerrier recurrence over exact integers:
///   M_1 = I,  c_{n-k} = -tr(A M_k) / k,  M_{k+1} = A M_k + c_{n-k} I.
/// Every division is exact because the c_i are integers.
inline IntPolynomial charpoly(const Graph& g) {
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<BigInt> c(un + 1, BigInt(0));
  c[un] = 1;
  if (n == 0) return IntPolynomial(std::move(c));

  std::vector<std::vector<int>> adj(un);
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix m(un, std::vector<BigInt>(un, BigInt(0)));
  for (std::size_t i = 0; i < un; ++i) m[i][i] = 1;
  Matrix am(un, std::vector<BigInt>(un));

  for (std::size_t k = 1; k <= un; ++k) {
    BigInt trace = 0;
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = 0; j < un; ++j) {
        BigInt s = 0;
        for (int l : adj[i]) s += m[static_cast<std::size_t>(l)][j];
        am[i][j] = std::move(s);
      }
      trace += am[i][i];
    }
    c[un - k] = -trace / static_cast<long>(k);
    if (k == un) break;
    std::swap(m, am);
    for (std::size_t i = 0; i < un; ++i) m[i][i] += c[un - k];
  }
  return IntPolynomial(std::move(c));
}

namespace detail {

// Appends the vertex mask of every simple cycle through v. Each cycle is
// reported once (the traversal direction with first neighbour
// smaller than last neighbour).
inline void cycles_through(const Graph& g, int v, std::vector<std::uint64_t>& out) {
  std::vector<int> path{v};
  std::uint64_t on_path = Graph::bit(v);
  auto dfs = [&](auto&& self, int u) -> void {
    for (int w : g.neighbors(u)) {
      if (w == v && path.size() >= 3 && path[1] < path.back()) out.push_back(on_path);
      if ((on_path >> w) & 1U) continue;
      path.push_back(w);
      on_path |= Graph::bit(w);
      self(self, w);
      on_path &= ~Graph::bit(w);
      path.pop_back();
    }
  };
  dfs(dfs, v);
}

inline IntPolynomial charpoly_by_deletion_memo(const Graph& g, int v,
                                               std::map<std::string, IntPolynomial>& memo) {
  if (g.order() == 0) return IntPolynomial::constant(1);
  const std::string key = graph6_encode(g) + "/" + std::to_string(v);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  auto sub = [&](std::uint64_t removed) {
    const Graph h = g.without(removed);
    return charpoly_by_deletion_memo(h, 0, memo);
  };

  // phi(G) = x phi(G-v) - sum_{vw in E} phi(G-v-w) - 2 sum_{Z in C(v)} phi(G-V(Z))
  IntPolynomial result = sub(Graph::bit(v)).shifted(1);
  for (int w : g.neighbors(v)) result -= sub(Graph::bit(v) | Graph::bit(w));
  std::vector<std::uint64_t> cycles;
  cycles_through(g, v, cycles);
  for (std::uint64_t mask : cycles) result -= sub(mask) * BigInt(2);

  memo.emplace(key, result);
  return result;
}

}  // namespace detail

/// Characteristic polynomial by repeated vertex deletion, expanding at `v`
/// and then at vertex 0 of every smaller graph. The empty graph has
/// polynomial 1. Exponential in the cycle count; meant for small graphs.
inline IntPolynomial charpoly_by_deletion(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw invalid_parameter("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
  std::map<std::string, IntPolynomial> memo;
  return detail::charpoly_by_deletion_memo(g, v, memo);
}

/// ER(G) from the characteristic polynomial. phi(n) > 0 because the largest
/// eigenvalue of a simple graph is at most n-1.
inline BigRational er_from_charpoly(const IntPolynomial& phi, int n) {
  const BigInt at = n;
  return BigRational(phi.derivative().evaluate(at), phi.evaluate(at));
}

inline BigRational er_exact(const Graph& g) {
  if (g.order() < 1) throw invalid_parameter("resolvent energy needs at least one vertex");
  return er_from_charpoly(charpoly(g), g.order());
}

}  // namespace resolvent
