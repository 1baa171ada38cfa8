#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace tempoflow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

// Renders integers bare ("5") and proper rationals as "p/q" ("-3/7").
inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (!is_integral(r)) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// Accepts the format produced by format_rational.
inline std::optional<Rational> parse_rational(const std::string& text) {
  auto parse_int = [](const std::string& part) -> std::optional<BigInt> {
    if (part.empty()) return std::nullopt;
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) return std::nullopt;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return std::nullopt;
    }
    return BigInt(part);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace tempoflow
