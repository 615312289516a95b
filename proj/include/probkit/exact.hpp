// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace probkit {

/// Arbitrary-precision integer used for all exact counting results.
/// Never overflows; counting operations signal resource limits instead.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Every probability handled by the exact modules
/// (finite spaces, joint laws, finite random variables) is one of these,
/// so identity tests can assert equality instead of tolerances.
using Rational = boost::multiprecision::cpp_rational;

/// Natural log of a positive big integer, accurate to a few ulps even when
/// the integer is far beyond double range. The top ~900 bits carry the
/// mantissa; the discarded low bits contribute a relative error < 2^-890.
inline double log_of(const BigInt& n) {
  if (n <= 0) {
    throw std::domain_error("log_of: argument must be a positive integer");
  }
  const auto bits = msb(n);  // floor(log2 n)
  if (bits <= 900) {
    return std::log(n.convert_to<double>());
  }
  const auto shift = bits - 900;
  const double mant = BigInt(n >> shift).convert_to<double>();
  return std::log(mant) + static_cast<double>(shift) * std::numbers::ln2;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact rational from a double: every finite double is a dyadic rational.
inline Rational exact_from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("exact_from_double: value is not finite");
  }
  return Rational(x);
}

inline Rational rational_pow(const Rational& base, std::uint64_t e) {
  return Rational(pow(numerator(base), static_cast<unsigned>(e)),
                  pow(denominator(base), static_cast<unsigned>(e)));
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Exact value of "[+-]ddd[.ddd][eN]" as a rational.
inline Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const std::string exp_part(s.substr(e + 1));
    s = s.substr(0, e);
    size_t used = 0;
    exponent10 = std::stol(exp_part, &used);
    if (used != exp_part.size()) {
      throw std::invalid_argument("malformed exponent in number");
    }
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    frac_len = static_cast<long>(s.size() - dot - 1);
  } else {
    digits = std::string(s);
  }
  if (!all_digits(digits)) {
    throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
  }
  // cpp_int would read a leading zero as an octal prefix.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational value(BigInt(digits), 1);
  const long net = exponent10 - frac_len;
  const BigInt scale = pow(BigInt(10), static_cast<unsigned>(net < 0 ? -net : net));
  if (net < 0) {
    value /= scale;
  } else {
    value *= scale;
  }
  return negative ? -value : value;
}

}  // namespace detail

/// Parses "num/den" or a terminating decimal ("0.25", "3", "-1e-2") exactly.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty string is not a number");
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = detail::parse_decimal(text.substr(0, slash));
    const Rational den = detail::parse_decimal(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    if (denominator(num) != 1 || denominator(den) != 1) {
      throw std::invalid_argument("fraction parts must be integers");
    }
    return num / den;
  }
  return detail::parse_decimal(text);
}

/// Canonical "num/den" rendering ("3/4", "1", "0").
inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

}  // namespace probkit
