#pragma once

// Named graph families that are extremal for resolvent energy among
// unicyclic, bicyclic and tricyclic graphs.
//
// Labeling convention: cycle / path vertices first in traversal order,
// pendant vertices last in ascending order. Every pendant-bearing family
// hangs its pendants on vertex 0.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "resolvent/error.hpp"
#include "resolvent/graph.hpp"

namespace resolvent {

enum class FamilyTag { Cn, CnStar, Xn, XnTilde, Theta, Yn, YnTilde, Z };

struct FamilyId {
  FamilyTag tag = FamilyTag::Cn;
  int order = 0;
  int z_index = 0;  // 1..6 for FamilyTag::Z
  int p = 0, q = 0, l = 0;  // path lengths for FamilyTag::Theta

  static FamilyId cycle(int n) { return {FamilyTag::Cn, n}; }
  static FamilyId cycle_star(int n) { return {FamilyTag::CnStar, n}; }
  static FamilyId x(int n) { return {FamilyTag::Xn, n}; }
  static FamilyId x_tilde(int n) { return {FamilyTag::XnTilde, n}; }
  static FamilyId y(int n) { return {FamilyTag::Yn, n}; }
  static FamilyId y_tilde(int n) { return {FamilyTag::YnTilde, n}; }
  static FamilyId z(int i, int n) { return {FamilyTag::Z, n, i}; }
  static FamilyId theta(int p, int q, int l) {
    return {FamilyTag::Theta, p + q + l - 1, 0, p, q, l};
  }

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Smallest order the construction admits.
inline int family_minimum_order(FamilyTag tag, int z_index = 0) {
  switch (tag) {
    case FamilyTag::Cn: return 3;
    case FamilyTag::Xn: return 3;
    case FamilyTag::CnStar: return 4;
    case FamilyTag::XnTilde: return 4;
    case FamilyTag::Yn: return 4;
    case FamilyTag::YnTilde: return 5;
    case FamilyTag::Theta: return 4;
    case FamilyTag::Z: {
      static constexpr std::array<int, 7> mins{0, 4, 5, 6, 5, 5, 6};
      if (z_index < 1 || z_index > 6)
        throw invalid_parameter("Z family index must be in 1..6, got " + std::to_string(z_index));
      return mins[static_cast<std::size_t>(z_index)];
    }
  }
  return 0;
}

/// Short name, e.g. "Xn", "Z3", "Theta:2:2:1".
inline std::string family_name(const FamilyId& id) {
  switch (id.tag) {
    case FamilyTag::Cn: return "Cn";
    case FamilyTag::CnStar: return "CnStar";
    case FamilyTag::Xn: return "Xn";
    case FamilyTag::XnTilde: return "XnTilde";
    case FamilyTag::Yn: return "Yn";
    case FamilyTag::YnTilde: return "YnTilde";
    case FamilyTag::Z: return "Z" + std::to_string(id.z_index);
    case FamilyTag::Theta:
      return "Theta:" + std::to_string(id.p) + ":" + std::to_string(id.q) + ":" + std::to_string(id.l);
  }
  return "?";
}

/// "family:NAME:n" (or "family:Theta:p:q:l").
inline std::string to_string(const FamilyId& id) {
  if (id.tag == FamilyTag::Theta) return "family:" + family_name(id);
  return "family:" + family_name(id) + ":" + std::to_string(id.order);
}

namespace detail {

inline void validate(const FamilyId& id) {
  if (id.tag == FamilyTag::Theta) {
    if (id.p < 1 || id.q < 1 || id.l < 1)
      throw invalid_parameter("theta path lengths must be >= 1");
    const int ones = (id.p == 1) + (id.q == 1) + (id.l == 1);
    if (ones > 1) throw invalid_parameter("theta graph allows at most one path of length 1");
    if (id.order != id.p + id.q + id.l - 1)
      throw invalid_parameter("theta order must equal p+q+l-1");
    return;
  }
  const int minimum = family_minimum_order(id.tag, id.z_index);
  if (id.order < minimum)
    throw invalid_parameter(family_name(id) + " requires n >= " + std::to_string(minimum) + ", got n=" +
                            std::to_string(id.order));
  if (id.order > Graph::max_order)
    throw invalid_parameter("order exceeds " + std::to_string(Graph::max_order));
}

/// Base graph on the first `core` vertices of an n-vertex graph; the rest
/// become pendants on vertex 0.
inline Graph with_pendants(int n, int core, std::initializer_list<std::pair<int, int>> core_edges) {
  Graph g(n);
  for (auto [u, v] : core_edges) g.add_edge(u, v);
  for (int v = core; v < n; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace detail

inline Graph build_family(const FamilyId& id) {
  detail::validate(id);
  const int n = id.order;
  switch (id.tag) {
    case FamilyTag::Cn:
      return cycle_graph(n);
    case FamilyTag::CnStar: {
      Graph g(n);
      for (int v = 0; v + 1 < n - 1; ++v) g.add_edge(v, v + 1);
      g.add_edge(n - 2, 0);
      g.add_edge(0, n - 1);
      return g;
    }
    case FamilyTag::Xn:
      return detail::with_pendants(n, 3, {{0, 1}, {1, 2}, {2, 0}});
    case FamilyTag::XnTilde:
      return detail::with_pendants(n, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case FamilyTag::Theta: {
      // Hubs 0 and 1, then the interior vertices of each path in turn.
      Graph g(n);
      int next = 2;
      for (int len : {id.p, id.q, id.l}) {
        int prev = 0;
        for (int step = 1; step < len; ++step) {
          g.add_edge(prev, next);
          prev = next++;
        }
        g.add_edge(prev, 1);
      }
      return g;
    }
    case FamilyTag::Yn:
      // theta(2,2,1): hubs 0,1 adjacent, interiors 2 and 3.
      return detail::with_pendants(n, 4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 1}});
    case FamilyTag::YnTilde:
      // theta(2,2,2) = K_{2,3}: hubs 0,1, interiors 2, 3, 4.
      return detail::with_pendants(n, 5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    case FamilyTag::Z:
      switch (id.z_index) {
        case 1:  // K4
          return detail::with_pendants(n, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        case 2:  // book of three triangles on the edge 0-1
          return detail::with_pendants(n, 5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
        case 3:  // K_{2,4}, hubs 0 and 1
          return detail::with_pendants(
              n, 6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
        case 4:  // fan: 0 joined to the path 1-2-3-4
          return detail::with_pendants(n, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
        case 5:  // C4 1-2-3-4 with 0 joined to three consecutive cycle vertices
          return detail::with_pendants(n, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}, {0, 3}});
        case 6:  // K_{3,3} minus an edge, sides {0,1,2} and {3,4,5}, edge 2-5 absent
          return detail::with_pendants(
              n, 6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
      }
      break;
  }
  throw invalid_parameter("unknown family");
}

/// Parses "family:NAME:n" or "family:Theta:p:q:l"; the "family:" prefix is
/// optional.
inline FamilyId parse_family_spec(std::string_view text) {
  const std::string_view full = text;
  if (text.starts_with("family:")) text.remove_prefix(7);
  std::vector<std::string_view> parts;
  while (true) {
    const auto colon = text.find(':');
    parts.push_back(text.substr(0, colon));
    if (colon == std::string_view::npos) break;
    text.remove_prefix(colon + 1);
  }
  auto offset_of = [&](std::string_view part) { return static_cast<std::size_t>(part.data() - full.data()); };
  auto number = [&](std::string_view part) {
    if (part.empty()) throw parse_error("expected a number", offset_of(part));
    int v = 0;
    for (char c : part) {
      if (c < '0' || c > '9') throw parse_error("expected a number", offset_of(part));
      v = v * 10 + (c - '0');
      if (v > 100000) throw parse_error("number too large", offset_of(part));
    }
    return v;
  };

  const std::string_view name = parts[0];
  if (name == "Theta") {
    if (parts.size() != 4) throw parse_error("expected Theta:p:q:l", offset_of(name));
    return FamilyId::theta(number(parts[1]), number(parts[2]), number(parts[3]));
  }
  if (parts.size() != 2) throw parse_error("expected NAME:n", offset_of(name));
  const int n = number(parts[1]);
  if (name == "Cn") return FamilyId::cycle(n);
  if (name == "CnStar") return FamilyId::cycle_star(n);
  if (name == "Xn") return FamilyId::x(n);
  if (name == "XnTilde") return FamilyId::x_tilde(n);
  if (name == "Yn") return FamilyId::y(n);
  if (name == "YnTilde") return FamilyId::y_tilde(n);
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '6')
    return FamilyId::z(name[1] - '0', n);
  throw parse_error("unknown family '" + std::string(name) +
                        "' (expected Cn, CnStar, Xn, XnTilde, Yn, YnTilde, Z1..Z6, Theta)",
                    offset_of(name));
}

/// Every constructible family at order n (Theta excluded: its order is fixed
/// by the path lengths).
inline std::vector<FamilyId> families_at(int n) {
  std::vector<FamilyId> out;
  for (FamilyTag t : {FamilyTag::Cn, FamilyTag::CnStar, FamilyTag::Xn, FamilyTag::XnTilde, FamilyTag::Yn,
                      FamilyTag::YnTilde})
    if (n >= family_minimum_order(t)) out.push_back({t, n});
  for (int i = 1; i <= 6; ++i)
    if (n >= family_minimum_order(FamilyTag::Z, i)) out.push_back(FamilyId::z(i, n));
  return out;
}

}  // namespace resolvent
