#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Coefficients are stored in ascending power order with no trailing zeros,
// so the zero polynomial is the empty vector and degree() == -1 for it.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resolvent/bigint.hpp"
#include "resolvent/error.hpp"

namespace resolvent {

template <typename T>
class Polynomial {
 public:
  using coefficient_type = T;

  Polynomial() = default;

  /// Coefficients in ascending power order: {c0, c1, c2, ...}.
  explicit Polynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<T> ascending) : coeffs_(ascending) { trim(); }

  /// Coefficients listed from the leading term down to the constant.
  static Polynomial from_descending(std::vector<T> descending) {
    std::reverse(descending.begin(), descending.end());
    return Polynomial(std::move(descending));
  }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  /// c * x^k
  static Polynomial monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  template <typename U>
  Polynomial<U> cast() const {
    std::vector<U> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.emplace_back(c);
    return Polynomial<U>(std::move(v));
  }

  /// Horner evaluation in the ring of the argument.
  template <typename U>
  U evaluate(const U& at) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  /// Multiply by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> v(k, T(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    std::vector<T> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

/// Quotient and remainder over a field: a = q*b + r, deg r < deg b.
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw invalid_parameter("polynomial division by zero");
  std::vector<T> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<T>{}, a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  const T& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const T c = r[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

/// Monic gcd over a field.
template <typename T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const T lead = a.leading();
  return a * (T(1) / lead);
}

// ---------------------------------------------------------------------------
// Text form: descending powers, "x^5 - 5*x^3 - 2*x^2 + 2*x". Unit
// coefficients are omitted on non-constant terms; the zero polynomial is "0".

inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

/// Inverse of to_string; whitespace is insignificant and like powers add.
inline IntPolynomial parse_polynomial(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_digits = [&](std::string_view what) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw parse_error(std::string("expected ") + std::string(what), start);
    return text.substr(start, i - start);
  };

  std::vector<BigInt> acc;
  auto add_term = [&](const BigInt& c, std::size_t k) {
    if (acc.size() <= k) acc.resize(k + 1, BigInt(0));
    acc[k] += c;
  };

  skip_ws();
  if (i == text.size()) throw parse_error("empty polynomial", 0);
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
      skip_ws();
    } else if (!first) {
      throw parse_error("expected '+' or '-' between terms", i);
    }
    first = false;
    if (i == text.size()) throw parse_error("dangling sign", i);

    BigInt c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      c = parse_bigint(read_digits("coefficient"));
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      } else {
        add_term(negative ? BigInt(-c) : c, 0);
        continue;
      }
    }
    if (i == text.size() || text[i] != 'x')
      throw parse_error(have_coeff ? "expected 'x' after '*'" : "expected a term", i);
    ++i;
    std::size_t k = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      k = static_cast<std::size_t>(std::stoul(std::string(read_digits("exponent"))));
    }
    add_term(negative ? BigInt(-c) : c, k);
  }
  return IntPolynomial(std::move(acc));
}

}  // namespace resolvent
