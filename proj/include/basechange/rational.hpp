#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "basechange/error.hpp"

namespace basechange {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  require(den != 0, ErrorKind::InvalidInput, "zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Largest integer not exceeding r.
inline BigInt floor(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

inline BigInt ceil(const Rational& r) { return -floor(-r); }

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p", "-p", "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> BigInt {
    require(!s.empty(), ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(i < s.size(), ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      require(s[j] >= '0' && s[j] <= '9', ErrorKind::InvalidInput,
              "malformed rational '" + std::string(text) + "'");
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  require(den != 0, ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

template <class Int>
Rational pow(const Rational& base, Int exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1) / base : base;
  auto e = exponent < 0 ? -static_cast<std::int64_t>(exponent) : static_cast<std::int64_t>(exponent);
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace basechange
