#pragma once

// Canonical labeling by individualization and refinement.
//
// The search refines an ordered vertex partition to an equitable one,
// individualizes each vertex of the first smallest non-singleton cell in
// turn, and recurses. Every leaf is a discrete partition, i.e. a labeling;
// the canonical form is the leaf whose relabeled graph has the smallest
// graph6 string. Twins (same neighbourhood apart from each other) in the
// target cell are exchanged by an automorphism that fixes the current
// partition, so only one of them is branched on.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resolvent/graph.hpp"
#include "resolvent/graph6.hpp"

namespace resolvent {

namespace detail {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

inline std::uint64_t cell_mask(const Cell& c) {
  std::uint64_t m = 0;
  for (int v : c) m |= Graph::bit(v);
  return m;
}

/// Split cells by neighbour counts into each splitter cell until stable.
/// Fragments are ordered by count, which keeps the result label-invariant.
inline void refine(const Graph& g, Partition& part) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < part.size() && !changed; ++s) {
      const std::uint64_t splitter = cell_mask(part[s]);
      for (std::size_t c = 0; c < part.size(); ++c) {
        if (part[c].size() == 1) continue;
        std::map<int, Cell> by_count;
        for (int v : part[c]) by_count[std::popcount(g.row(v) & splitter)].push_back(v);
        if (by_count.size() == 1) continue;
        Partition next(part.begin(), part.begin() + static_cast<std::ptrdiff_t>(c));
        for (auto& [count, cell] : by_count) next.push_back(std::move(cell));
        next.insert(next.end(), part.begin() + static_cast<std::ptrdiff_t>(c) + 1, part.end());
        part = std::move(next);
        changed = true;
        break;
      }
    }
  }
}

inline bool twins(const Graph& g, int u, int w) {
  const std::uint64_t mask = ~(Graph::bit(u) | Graph::bit(w));
  return (g.row(u) & mask) == (g.row(w) & mask);
}

struct CanonicalSearch {
  const Graph& g;
  std::string best;
  std::vector<int> best_labeling;

  void leaf(const Partition& part) {
    std::vector<int> label(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < part.size(); ++i) label[static_cast<std::size_t>(part[i][0])] = static_cast<int>(i);
    std::string cert = graph6_encode(g.permuted(label));
    if (best.empty() || cert < best) {
      best = std::move(cert);
      best_labeling = std::move(label);
    }
  }

  void search(Partition part) {
    refine(g, part);
    std::size_t target = part.size();
    for (std::size_t i = 0; i < part.size(); ++i)
      if (part[i].size() > 1 && (target == part.size() || part[i].size() < part[target].size())) target = i;
    if (target == part.size()) {
      leaf(part);
      return;
    }
    std::vector<int> tried;
    for (int v : part[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(g, t, v); })) continue;
      tried.push_back(v);
      Partition child(part.begin(), part.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back({v});
      Cell rest;
      for (int w : part[target])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      child.insert(child.end(), part.begin() + static_cast<std::ptrdiff_t>(target) + 1, part.end());
      search(std::move(child));
    }
  }
};

}  // namespace detail

struct CanonicalForm {
  std::string graph6;          // of the canonically relabeled graph
  std::vector<int> labeling;   // vertex v of the input gets label labeling[v]
};

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {graph6_encode(g), {}};
  detail::Cell all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  detail::CanonicalSearch s{g, {}, {}};
  s.search({all});
  return {std::move(s.best), std::move(s.best_labeling)};
}

inline std::string canonical_graph6(const Graph& g) { return canonical_form(g).graph6; }

inline Graph canonical_graph(const Graph& g) { return graph6_decode(canonical_graph6(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && edge_count(a) == edge_count(b) && canonical_graph6(a) == canonical_graph6(b);
}

}  // namespace resolvent
