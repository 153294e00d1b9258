#pragma once

// Exact real-root counting with Sturm sequences over the rationals.

#include <cstddef>
#include <vector>

#include "resolvent/bigint.hpp"
#include "resolvent/error.hpp"
#include "resolvent/polynomial.hpp"

namespace resolvent {

/// Canonical Sturm chain of the square-free part of p:
///   s0 = p / gcd(p, p'),  s1 = s0',  s_{k+1} = -rem(s_{k-1}, s_k).
inline std::vector<RatPolynomial> sturm_sequence(const IntPolynomial& p) {
  if (p.is_zero()) throw invalid_parameter("Sturm sequence of the zero polynomial");
  const RatPolynomial rp = p.cast<BigRational>();
  const RatPolynomial g = gcd(rp, rp.derivative());
  std::vector<RatPolynomial> chain{divmod(rp, g).first};
  chain.push_back(chain.front().derivative());
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    chain.push_back(-divmod(a, b).second);
  }
  chain.pop_back();
  return chain;
}

/// Sign changes along the chain at x, zeros skipped.
inline int sign_variations(const std::vector<RatPolynomial>& chain, const BigRational& x) {
  int changes = 0, last = 0;
  for (const auto& s : chain) {
    const BigRational v = s.evaluate(x);
    const int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

/// 1 + max |c_i / c_deg|: every real root lies strictly inside (-B, B).
inline BigRational cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return BigRational(1);
  const BigInt lead = abs(p.leading());
  BigRational best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const BigRational r(abs(p.coeff(static_cast<std::size_t>(i))), lead);
    if (r > best) best = r;
  }
  return best + 1;
}

/// Number of distinct real roots in the open interval (lo, hi).
///
/// With a Sturm chain, V(a) - V(b) counts the distinct roots in (a, b] for
/// any a < b, including when a or b is itself a root; a root at hi is then
/// subtracted to make the interval open.
inline int sturm_real_root_count(const IntPolynomial& p, const BigRational& lo, const BigRational& hi) {
  if (p.is_zero()) throw invalid_parameter("root count of the zero polynomial");
  if (!(lo < hi)) throw invalid_parameter("root count needs lo < hi");
  const auto chain = sturm_sequence(p);
  const int half_open = sign_variations(chain, lo) - sign_variations(chain, hi);
  return half_open - (p.evaluate(hi) == 0 ? 1 : 0);
}

/// All distinct real roots.
inline int sturm_real_root_count(const IntPolynomial& p) {
  const BigRational b = cauchy_bound(p);
  return sturm_real_root_count(p, -b, b);
}

/// Distinct real roots in [from, infinity).
inline int real_roots_at_or_above(const IntPolynomial& p, const BigRational& from) {
  const BigRational b = cauchy_bound(p);
  const int at = p.evaluate(from) == 0 ? 1 : 0;
  if (from >= b) return at;
  return at + sturm_real_root_count(p, from, b);
}

}  // namespace resolvent
