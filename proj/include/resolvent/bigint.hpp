#pragma once

// Arbitrary-precision integers and rationals.
//
// Both types are Boost.Multiprecision backends; cpp_rational keeps every
// value normalized (gcd(|num|, den) = 1, den > 0) after each operation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdlib>
#include <cstddef>
#include <string>
#include <string_view>

#include "resolvent/error.hpp"

namespace resolvent {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow_int(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw invalid_parameter("rational with zero denominator");
  return den < 0 ? BigRational(BigInt(-num), BigInt(-den)) : BigRational(num, den);
}

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

/// "p/q" with q > 0 and gcd 1; integers print as "p/1".
inline std::string to_string(const BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

namespace detail {

inline BigInt parse_int(std::string_view text, std::size_t base_offset) {
  if (text.empty()) throw parse_error("expected an integer", base_offset);
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    ++i;
  }
  if (i == text.size()) throw parse_error("expected digits after sign", base_offset + i);
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(std::string("unexpected character '") + c + "' in integer",
                        base_offset + i);
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace detail

inline BigInt parse_bigint(std::string_view text) { return detail::parse_int(text, 0); }

/// Accepts "p/q" or a bare integer "p"; the result is normalized.
inline BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(detail::parse_int(text, 0));
  BigInt num = detail::parse_int(text.substr(0, slash), 0);
  BigInt den = detail::parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw parse_error("zero denominator", slash + 1);
  return make_rational(num, den);
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

/// Decimal rendering with `digits` significant digits, rounded half-to-even
/// from the exact value. Trailing zeros after the point are dropped (one is
/// kept); magnitudes outside [1e-4, 1e15) use scientific notation.
inline std::string to_decimal(const BigRational& q, int digits = 12) {
  if (q == 0) return "0.0";
  const bool negative = q < 0;
  BigRational a = negative ? BigRational(-q) : q;

  // a = m * 10^e with 1 <= m < 10.
  const BigInt hi = pow_int(BigInt(10), static_cast<unsigned>(digits));
  int e = 0;
  {
    BigRational t = a;
    while (t >= 10) { t /= 10; ++e; }
    while (t < 1) { t *= 10; --e; }
  }
  auto scaled_by = [&](int shift) {
    BigRational s = a;
    if (shift >= 0) s *= BigRational(pow_int(BigInt(10), static_cast<unsigned>(shift)));
    else s /= BigRational(pow_int(BigInt(10), static_cast<unsigned>(-shift)));
    return s;
  };
  BigRational s = scaled_by(digits - 1 - e);
  BigInt whole = boost::multiprecision::numerator(s) / boost::multiprecision::denominator(s);
  BigRational frac = s - BigRational(whole);
  const BigRational half(1, 2);
  if (frac > half || (frac == half && (whole % 2) != 0)) ++whole;
  if (whole >= hi) {
    whole /= 10;
    ++e;
  }

  std::string mant = whole.str();  // exactly `digits` characters
  std::string out;
  if (e >= -4 && e < 15) {
    if (e >= 0) {
      const auto int_len = static_cast<std::size_t>(e) + 1;
      if (mant.size() < int_len) mant.append(int_len - mant.size(), '0');
      out = mant.substr(0, int_len) + "." + mant.substr(int_len);
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
    }
    while (out.size() > 2 && out.back() == '0' && out[out.size() - 2] != '.') out.pop_back();
    if (out.back() == '.') out.push_back('0');
  } else {
    std::string tail = mant.substr(1);
    while (!tail.empty() && tail.back() == '0') tail.pop_back();
    if (tail.empty()) tail = "0";
    out = mant.substr(0, 1) + "." + tail + "e" + (e < 0 ? "-" : "+") +
          (std::abs(e) < 10 ? "0" : "") + std::to_string(std::abs(e));
  }
  return negative ? "-" + out : out;
}

}  // namespace resolvent
