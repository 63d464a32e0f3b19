#pragma once

// Exact rational arithmetic used throughout the library. Nothing in repgame
// touches floating point; the only place a decimal approximation appears is
// format_decimal(), which rounds exactly from the rational value.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace repgame {

using BigInt = boost::multiprecision::cpp_int;
// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt floor_of(const Rational& q) {
  BigInt n = numerator_of(q), d = denominator_of(q);
  BigInt f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) --f;
  return f;
}

/// Parses `p`, `-p` or `p/q` (q > 0). Returns nullopt on anything else,
/// including decimal points and exponents.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) return std::nullopt;
  }
  if (!all_digits(num)) return std::nullopt;
  BigInt n{std::string(num)};
  BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den));
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(n, d);
}

inline Rational parse_rational(std::string_view text) {
  if (auto q = try_parse_rational(text)) return *q;
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

/// Exact rendering: `p` for integers, `p/q` otherwise.
inline std::string to_string(const Rational& q) {
  BigInt n = numerator_of(q), d = denominator_of(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

namespace detail {

inline BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

// Round-half-even of a non-negative rational to an integer.
inline BigInt round_half_even(const Rational& x) {
  BigInt n = numerator_of(x), d = denominator_of(x);
  BigInt q = n / d;
  BigInt r2 = 2 * (n % d);
  if (r2 > d || (r2 == d && (q % 2) != 0)) ++q;
  return q;
}

}  // namespace detail

/// Decimal approximation with `digits` significant digits, rounded
/// half-to-even from the exact value. Fixed notation for decimal exponents
/// in [-5, digits), scientific (`d.ddde+XX`) outside that window; trailing
/// fractional zeros are dropped.
inline std::string format_decimal(const Rational& value, int digits = 12) {
  if (digits < 1) throw std::invalid_argument("format_decimal: digits must be >= 1");
  if (value == 0) return "0";
  const bool negative = value < 0;
  const Rational a = negative ? Rational(-value) : value;

  // exponent e with 10^e <= a < 10^(e+1)
  int e = static_cast<int>(numerator_of(a).str().size()) -
          static_cast<int>(denominator_of(a).str().size());
  auto scale = [](int k) {
    return k >= 0 ? Rational(detail::pow10(k)) : Rational(BigInt(1), detail::pow10(-k));
  };
  while (a < scale(e)) --e;
  while (a >= scale(e + 1)) ++e;

  BigInt m = detail::round_half_even(a * scale(digits - 1 - e));
  if (m == detail::pow10(digits)) {
    m /= 10;
    ++e;
  }
  std::string ds = m.str();  // exactly `digits` characters
  // Trailing zeros carry no information once the exponent is fixed (as %g).
  while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

  std::string out = negative ? "-" : "";
  if (e >= -5 && e < digits) {
    if (e >= 0) {
      const auto int_len = static_cast<std::size_t>(e) + 1;
      if (ds.size() < int_len) ds.append(int_len - ds.size(), '0');
      out += ds.substr(0, int_len);
      if (int_len < ds.size()) out += "." + ds.substr(int_len);
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
  } else {
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += e < 0 ? "e-" : "e+";
    std::string ex = std::to_string(e < 0 ? -e : e);
    if (ex.size() < 2) ex = "0" + ex;
    out += ex;
  }
  return out;
}

}  // namespace repgame
