#pragma once

// Published closed forms for the extremal families and the published
// resolvent-energy difference quotients between them.
//
// Each closed form reads phi(G, x) = x^{n-k} f(x; n) where every coefficient
// of f is affine in n.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resolvent/bigint.hpp"
#include "resolvent/charpoly.hpp"
#include "resolvent/error.hpp"
#include "resolvent/families.hpp"
#include "resolvent/polynomial.hpp"

namespace resolvent {

/// f(x; n) with coefficient of x^j equal to slope_j * n + intercept_j.
struct CoreForm {
  int k = 0;  // phi = x^{n-k} f
  std::vector<std::pair<long, long>> descending;  // (slope, intercept), leading term first

  /// f(x; n) as a polynomial in x.
  IntPolynomial at_order(int n) const {
    std::vector<BigInt> c;
    for (auto [a, b] : descending) c.emplace_back(BigInt(a) * n + b);
    return IntPolynomial::from_descending(std::move(c));
  }

  /// f(n; n) as a polynomial in n.
  IntPolynomial diagonal() const {
    IntPolynomial out;
    const int deg = static_cast<int>(descending.size()) - 1;
    for (int j = 0; j <= deg; ++j) {
      auto [a, b] = descending[static_cast<std::size_t>(deg - j)];
      out += IntPolynomial{BigInt(b), BigInt(a)}.shifted(static_cast<std::size_t>(j));
    }
    return out;
  }
};

/// Closed form as printed, or nullopt for families without one.
inline std::optional<CoreForm> published_core(FamilyTag tag, int z_index = 0) {
  switch (tag) {
    case FamilyTag::Xn: return CoreForm{4, {{0, 1}, {0, 0}, {-1, 0}, {0, -2}, {1, -3}}};
    case FamilyTag::XnTilde: return CoreForm{4, {{0, 1}, {0, 0}, {-1, 0}, {0, 0}, {2, -8}}};
    case FamilyTag::Yn: return CoreForm{4, {{0, 1}, {0, 0}, {-1, -1}, {0, -4}, {2, -8}}};
    case FamilyTag::YnTilde: return CoreForm{4, {{0, 1}, {0, 0}, {-1, -1}, {0, 0}, {3, -15}}};
    case FamilyTag::Z:
      switch (z_index) {
        case 1: return CoreForm{5, {{0, 1}, {0, 0}, {-1, -2}, {0, -8}, {3, -15}, {2, -8}}};
        case 2: return CoreForm{4, {{0, 1}, {0, 0}, {-1, -2}, {0, -6}, {3, -15}}};
        case 3: return CoreForm{4, {{0, 1}, {0, 0}, {-1, -2}, {0, 0}, {4, -24}}};
        case 4: return CoreForm{6, {{0, 1}, {0, 0}, {-1, -2}, {0, -6}, {3, -12}, {0, 2}, {-1, 5}}};
        case 5: return CoreForm{5, {{0, 1}, {0, 0}, {-1, -2}, {0, -4}, {4, -16}, {0, 4}}};
        case 6: return CoreForm{6, {{0, 1}, {0, 0}, {-1, -2}, {0, 0}, {5, -25}, {0, 0}, {-2, 16}}};
        default: break;
      }
      break;
    default: break;
  }
  return std::nullopt;
}

/// x^{shift} p for shift >= 0; for negative shift, exact division by x^{-shift}.
inline std::optional<IntPolynomial> shift_exact(const IntPolynomial& p, int shift) {
  if (shift >= 0) return p.shifted(static_cast<std::size_t>(shift));
  const auto drop = static_cast<std::size_t>(-shift);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < drop && i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  if (drop >= c.size()) return IntPolynomial{};
  return IntPolynomial(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(drop), c.end()));
}

/// The published closed form expanded at order n, prefactor included.
inline IntPolynomial family_charpoly(const FamilyId& id) {
  const auto core = published_core(id.tag, id.z_index);
  if (!core)
    throw unsupported_family(family_name(id) +
                             " has no published closed form; use charpoly(build_family(id))");
  detail::validate(id);
  auto full = shift_exact(core->at_order(id.order), id.order - core->k);
  if (!full)
    throw invalid_parameter(family_name(id) + " closed form is not a polynomial at n=" +
                            std::to_string(id.order));
  return *full;
}

inline BigRational er_difference(const FamilyId& a, const FamilyId& b) {
  if (a.order != b.order)
    throw invalid_parameter("er_difference needs equal orders, got " + std::to_string(a.order) + " and " +
                            std::to_string(b.order));
  return er_exact(build_family(a)) - er_exact(build_family(b));
}

// ---------------------------------------------------------------------------
// Published difference quotients ER(A_n) - ER(B_n) = num(n) / den(n).

struct DocumentedPair {
  std::string id;  // e.g. "Xn-XnTilde"
  FamilyId (*first)(int);
  FamilyId (*second)(int);
  IntPolynomial numerator;                 // in n
  std::vector<IntPolynomial> denominator;  // factors in n
  int min_order;
  std::string paper_ref;

  BigRational quotient(int n) const {
    const BigInt at = n;
    BigInt den = 1;
    for (const auto& f : denominator) den *= f.evaluate(at);
    return make_rational(numerator.evaluate(at), den);
  }
};

namespace detail {

inline IntPolynomial desc(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPolynomial::from_descending(std::move(v));
}

inline IntPolynomial z_diag(int i) { return published_core(FamilyTag::Z, i)->diagonal(); }

}  // namespace detail

/// The seven quotients printed with their extremal comparisons.
inline const std::vector<DocumentedPair>& documented_pairs() {
  using detail::desc;
  using detail::z_diag;
  static const std::vector<DocumentedPair> pairs = [] {
    const IntPolynomial n = IntPolynomial::x();
    std::vector<DocumentedPair> v;
    v.push_back({"Xn-XnTilde", &FamilyId::x, &FamilyId::x_tilde, desc({10, -24, 10, -4, 16}),
                 {desc({1, -1, 0, -1, -3}), desc({1, -1, 0, 2, -8})}, 4,
                 "Theorem 2.3 proof: (10n^4-24n^3+10n^2-4n+16)/((n^4-n^3-n-3)(n^4-n^3+2n-8))"});
    v.push_back({"Yn-YnTilde", &FamilyId::y, &FamilyId::y_tilde, desc({16, -34, 8, 2, 60}),
                 {desc({1, -1, -1, -2, -8}), desc({1, -1, -1, 3, -15})}, 5,
                 "Theorem 3.2 proof: (16n^4-34n^3+8n^2+2n+60)/((n^4-n^3-n^2-2n-8)(n^4-n^3-n^2+3n-15))"});
    v.push_back({"Z1-Z2", [](int k) { return FamilyId::z(1, k); }, [](int k) { return FamilyId::z(2, k); },
                 desc({6, -12, 42, -18, 0, -42, -120}), {n, z_diag(1), z_diag(2)}, 5,
                 "Theorem 4.2 proof: (6n^6-12n^5+42n^4-18n^3-42n-120)/(n f_1(n) f_2(n))"});
    v.push_back({"Z1-Z3", [](int k) { return FamilyId::z(1, k); }, [](int k) { return FamilyId::z(3, k); },
                 desc({28, -56, 44, -8, 136, 80, -192}), {n, z_diag(1), z_diag(3)}, 6,
                 "Theorem 4.2 proof: (28n^6-56n^5+44n^4-8n^3+136n^2+80n-192)/(n f_1(n) f_3(n))"});
    v.push_back({"Z1-Z4", [](int k) { return FamilyId::z(1, k); }, [](int k) { return FamilyId::z(4, k); },
                 desc({6, 0, 40, -2, -48, -96, -188, -132, -40}), {n, z_diag(1), z_diag(4)}, 5,
                 "Theorem 4.2 proof: (6n^8+40n^6-2n^5-48n^4-96n^3-188n^2-132n-40)/(n f_1(n) f_4(n))"});
    v.push_back({"Z1-Z5", [](int k) { return FamilyId::z(1, k); }, [](int k) { return FamilyId::z(5, k); },
                 desc({16, -20, 56, -40, 4, -52, -188, 0}), {n, z_diag(1), z_diag(5)}, 5,
                 "Theorem 4.2 proof: (16n^7-20n^6+56n^5-40n^4+4n^3-52n^2-188n)/(n f_1(n) f_5(n))"});
    v.push_back({"Z1-Z6", [](int k) { return FamilyId::z(1, k); }, [](int k) { return FamilyId::z(6, k); },
                 desc({32, -62, 30, 92, 94, -2, -432, -432, -128}), {n, z_diag(1), z_diag(6)}, 6,
                 "Theorem 4.2 proof: (32n^8-62n^7+30n^6+92n^5+94n^4-2n^3-432n^2-432n-128)/(n f_1(n) f_6(n))"});
    return v;
  }();
  return pairs;
}

inline const DocumentedPair* find_documented_pair(const FamilyId& a, const FamilyId& b) {
  for (const auto& p : documented_pairs()) {
    const FamilyId pa = p.first(a.order), pb = p.second(a.order);
    if (pa.tag == a.tag && pa.z_index == a.z_index && pb.tag == b.tag && pb.z_index == b.z_index) return &p;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Recomputed quotients from the constructed graphs.
//
// For phi_A = x^{n-kA} g_A and phi_B = x^{n-kB} g_B,
//   ER(A) - ER(B) = [(kB - kA) g_A(n) g_B(n) + n (g_A'(n) g_B(n) - g_B'(n) g_A(n))]
//                   / (n g_A(n) g_B(n)).

/// Actual core of a constructed family: charpoly / x^{n-k}.
inline IntPolynomial actual_core(const FamilyId& id, int k) {
  auto core = shift_exact(charpoly(build_family(id)), k - id.order);
  if (!core)
    throw invalid_parameter(family_name(id) + " charpoly is not divisible by x^{n-" + std::to_string(k) + "}");
  return *core;
}

struct RecomputedQuotient {
  IntPolynomial numerator;  // interpolated in n
  bool consistent = false;  // numerator reproduces every sample and equals the exact ER gap
  bool positive = false;    // every sampled difference > 0
  std::vector<int> mismatched_orders;  // where the published quotient disagrees
};

/// Lagrange interpolation through (x_i, y_i) over the rationals.
inline RatPolynomial interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
  RatPolynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPolynomial basis = RatPolynomial::constant(BigRational(1));
    BigRational scale = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial{-xs[j], BigRational(1)};
      scale *= xs[i] - xs[j];
    }
    out += basis * (ys[i] / scale);
  }
  return out;
}

inline RecomputedQuotient recompute_quotient(const DocumentedPair& pair, int lo, int hi) {
  lo = std::max(lo, pair.min_order);
  const int kA = published_core(pair.first(lo).tag, pair.first(lo).z_index)->k;
  const int kB = published_core(pair.second(lo).tag, pair.second(lo).z_index)->k;

  RecomputedQuotient out;
  out.positive = true;
  std::vector<BigInt> samples;
  std::vector<BigRational> gaps;
  std::vector<BigRational> dens;
  for (int n = lo; n <= hi; ++n) {
    const FamilyId a = pair.first(n), b = pair.second(n);
    const IntPolynomial ga = actual_core(a, kA), gb = actual_core(b, kB);
    const BigInt x = n;
    const BigInt ga_n = ga.evaluate(x), gb_n = gb.evaluate(x);
    samples.push_back(BigInt(kB - kA) * ga_n * gb_n +
                      x * (ga.derivative().evaluate(x) * gb_n - gb.derivative().evaluate(x) * ga_n));
    dens.emplace_back(x * ga_n * gb_n);
    gaps.push_back(er_difference(a, b));
    if (gaps.back() <= 0) out.positive = false;
    if (pair.quotient(n) != gaps.back()) out.mismatched_orders.push_back(n);
  }

  // Degree of the numerator is at most deg g_A + deg g_B + 1 <= 13.
  const std::size_t fit = std::min<std::size_t>(samples.size(), 14);
  std::vector<BigRational> xs, ys;
  for (std::size_t i = 0; i < fit; ++i) {
    xs.emplace_back(lo + static_cast<int>(i));
    ys.emplace_back(samples[i]);
  }
  const RatPolynomial fitted = interpolate(xs, ys);
  bool integral = true;
  std::vector<BigInt> coeffs;
  for (const auto& c : fitted.coefficients()) {
    if (denominator(c) != 1) integral = false;
    coeffs.push_back(numerator(c));
  }
  out.numerator = IntPolynomial(std::move(coeffs));
  out.consistent = integral;
  for (std::size_t i = 0; i < samples.size() && out.consistent; ++i) {
    const BigInt x = lo + static_cast<int>(i);
    const BigInt value = out.numerator.evaluate(x);
    if (value != samples[i] || BigRational(value) / dens[i] != gaps[i]) out.consistent = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

// Paths and cycles beyond Graph::max_order, by vertex deletion at an end
// vertex or at the pendant:
//   phi(P_k)  = x phi(P_{k-1}) - phi(P_{k-2})
//   phi(C_n)  = phi(P_n) - phi(P_{n-2}) - 2
//   phi(C_n*) = x phi(C_{n-1}) - phi(P_{n-2})

inline IntPolynomial path_charpoly(int k) {
  if (k < 0) throw invalid_parameter("path order must be nonnegative");
  IntPolynomial prev = IntPolynomial::constant(BigInt(1)), cur = IntPolynomial::x();
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    IntPolynomial next = cur.shifted(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline IntPolynomial cycle_charpoly(int n) {
  if (n < 3) throw invalid_parameter("cycle needs n >= 3, got n=" + std::to_string(n));
  return path_charpoly(n) - path_charpoly(n - 2) - IntPolynomial::constant(BigInt(2));
}

inline IntPolynomial cycle_star_charpoly(int n) {
  if (n < 4) throw invalid_parameter("CnStar needs n >= 4, got n=" + std::to_string(n));
  return cycle_charpoly(n - 1).shifted(1) - path_charpoly(n - 2);
}

/// ER(C_n) - ER(C_n*), exactly, for any n >= 5.
inline BigRational cn_cnstar_gap(int n) {
  if (n < 5) throw invalid_parameter("cn_cnstar_gap requires n >= 5, got n=" + std::to_string(n));
  return er_from_charpoly(cycle_charpoly(n), n) - er_from_charpoly(cycle_star_charpoly(n), n);
}

}  // namespace resolvent
