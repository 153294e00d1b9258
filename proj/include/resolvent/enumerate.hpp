#pragma once

// Connected graphs with cyclomatic number c, one per isomorphism class.
//
// Every connected graph with c >= 1 has an edge on a cycle whose removal
// leaves a connected graph with cyclomatic number c-1. So the classes at
// level c are exactly the canonical forms of {G + e : G at level c-1, e a
// non-edge}, starting from the trees, which are themselves grown leaf by
// leaf from K_1.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "resolvent/canonical.hpp"
#include "resolvent/error.hpp"
#include "resolvent/graph.hpp"
#include "resolvent/graph6.hpp"

namespace resolvent {

namespace detail {

/// Canonicalize candidates produced by `expand(graph, sink)` for every
/// input graph, across `jobs` threads. The result is sorted, so it does not
/// depend on scheduling.
template <typename Expand>
std::vector<std::string> expand_level(const std::vector<Graph>& inputs, Expand expand, unsigned jobs) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(inputs.size())));
  std::vector<std::set<std::string>> partial(jobs);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < inputs.size(); i += jobs)
      expand(inputs[i], [&](const Graph& h) { partial[worker].insert(canonical_graph6(h)); });
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  std::set<std::string> merged;
  for (auto& s : partial) merged.merge(s);
  return {merged.begin(), merged.end()};
}

inline std::vector<Graph> decode_all(const std::vector<std::string>& codes) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(graph6_decode(c));
  return out;
}

}  // namespace detail

/// Unlabeled trees on n vertices in canonical form, sorted by graph6.
inline std::vector<Graph> enumerate_trees(int n, unsigned jobs = 1) {
  if (n < 1 || n > graph6_max_order) throw invalid_parameter("tree order out of range");
  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < n; ++k) {
    auto codes = detail::expand_level(
        level,
        [k](const Graph& t, auto&& sink) {
          for (int v = 0; v < k; ++v) {
            Graph h(k + 1);
            for (auto [a, b] : t.edges()) h.add_edge(a, b);
            h.add_edge(v, k);
            sink(h);
          }
        },
        jobs);
    level = detail::decode_all(codes);
  }
  return level;
}

inline constexpr int enumeration_max_order = 10;

/// Connected graphs on n vertices with n-1+c edges, one canonical
/// representative per isomorphism class, sorted by canonical graph6.
inline std::vector<Graph> enumerate_connected(int n, int c, unsigned jobs = 1) {
  if (n < 3 || n > enumeration_max_order)
    throw invalid_parameter("enumeration order must be in 3.." + std::to_string(enumeration_max_order) +
                            ", got " + std::to_string(n));
  if (c < 1 || c > 3) throw invalid_parameter("cyclomatic number must be in 1..3, got " + std::to_string(c));
  if (n - 1 + c > n * (n - 1) / 2)
    throw invalid_parameter("no simple graph on " + std::to_string(n) + " vertices has " +
                            std::to_string(n - 1 + c) + " edges");
  std::vector<Graph> level = enumerate_trees(n, jobs);
  for (int step = 0; step < c; ++step) {
    auto codes = detail::expand_level(
        level,
        [n](const Graph& g, auto&& sink) {
          for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
              if (g.has_edge(u, v)) continue;
              Graph h = g;
              h.add_edge(u, v);
              sink(h);
            }
        },
        jobs);
    level = detail::decode_all(codes);
  }
  return level;
}

}  // namespace resolvent
