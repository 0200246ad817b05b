#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

namespace skewpbw {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "[-]INT" or "[-]INT/POSINT". Returns nullopt on malformed input or a
/// zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits(num) || !digits(den)) return std::nullopt;
  Integer d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational q{Integer{std::string(num)}, d};
  return negative ? Rational{-q} : q;
}

}  // namespace skewpbw
