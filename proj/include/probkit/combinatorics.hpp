// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "probkit/exact.hpp"

namespace probkit::combinatorics {

/// Upper bound on factorial arguments unless the caller raises it; bounds
/// worst-case memory for a single result (~0.5 MB of digits at the default).
inline constexpr std::int64_t kDefaultFactorialLimit = 100000;

/// n!, exactly. factorial(0) = 1.
inline BigInt factorial(std::int64_t n, std::int64_t limit = kDefaultFactorialLimit) {
  if (n < 0) {
    throw std::domain_error("factorial: n must be >= 0");
  }
  if (n > limit) {
    throw std::length_error("factorial: n exceeds the configured limit");
  }
  BigInt acc = 1;
  for (std::int64_t k = 2; k <= n; ++k) acc *= k;
  return acc;
}

/// Number of ordered p-tuples of distinct elements from an n-set:
/// A_n^p = n(n-1)...(n-p+1). Zero when p > n; A_n^0 = 1.
inline BigInt arrangements(std::int64_t n, std::int64_t p) {
  if (n < 0 || p < 0) {
    throw std::domain_error("arrangements: n and p must be >= 0");
  }
  if (p > n) return 0;
  BigInt acc = 1;
  for (std::int64_t k = 0; k < p; ++k) acc *= (n - k);
  return acc;
}

/// Number of maps from a p-set to an n-set: n^p, with 0^0 = 1.
inline BigInt count_maps(std::int64_t p, std::int64_t n) {
  if (n < 0 || p < 0) {
    throw std::domain_error("count_maps: n and p must be >= 0");
  }
  return pow(BigInt(n), static_cast<unsigned>(p));
}

/// Binomial coefficient C(n,p) = n!/(p!(n-p)!). Zero when p > n.
/// Multiplicative evaluation; every intermediate division is exact.
inline BigInt combinations(std::int64_t n, std::int64_t p) {
  if (n < 0 || p < 0) {
    throw std::domain_error("combinations: n and p must be >= 0");
  }
  if (p > n) return 0;
  if (p > n - p) p = n - p;  // C(n,p) = C(n,n-p)
  BigInt acc = 1;
  for (std::int64_t k = 1; k <= p; ++k) {
    acc = acc * (n - p + k) / k;
  }
  return acc;
}

/// Row n of Pascal's triangle, [C(n,0),...,C(n,n)], built purely from the
/// boundary 1s and the recurrence C(n-1,p-1)+C(n-1,p) = C(n,p). Deliberately
/// independent of the factorial route so the two can check each other.
inline std::vector<BigInt> pascal_row(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("pascal_row: n must be >= 0");
  }
  std::vector<BigInt> row{BigInt(1)};
  for (std::int64_t r = 1; r <= n; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1, BigInt(1));
    for (std::int64_t p = 1; p < r; ++p) {
      next[static_cast<std::size_t>(p)] =
          row[static_cast<std::size_t>(p - 1)] + row[static_cast<std::size_t>(p)];
    }
    row = std::move(next);
  }
  return row;
}

/// Permutations with repetition of blocks of sizes parts_i:
/// (sum parts)! / prod(parts_i!).
inline BigInt multinomial(std::span<const std::int64_t> parts) {
  if (parts.empty()) {
    throw std::domain_error("multinomial: needs at least one block");
  }
  std::int64_t total = 0;
  for (std::int64_t part : parts) {
    if (part < 0) {
      throw std::domain_error("multinomial: block sizes must be >= 0");
    }
    total += part;
  }
  BigInt acc = factorial(total);
  for (std::int64_t part : parts) acc /= factorial(part);
  return acc;
}

inline BigInt multinomial(std::initializer_list<std::int64_t> parts) {
  return multinomial(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

/// sum_p C(n,p) a^p b^(n-p); equals (a+b)^n by the binomial theorem, which is
/// exactly what the tests confirm. The sum runs in exact rational arithmetic
/// over the binary values of a and b: the alternating terms cancel massively
/// for a near -b, and a floating sum would lose the identity there.
inline double binomial_theorem_eval(double a, double b, std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("binomial_theorem_eval: n must be >= 0");
  }
  const std::vector<BigInt> row = pascal_row(n);
  const Rational ra = exact_from_double(a);
  const Rational rb = exact_from_double(b);
  Rational sum = 0;
  for (std::int64_t p = 0; p <= n; ++p) {
    sum += Rational(row[static_cast<std::size_t>(p)]) *
           rational_pow(ra, static_cast<std::uint64_t>(p)) *
           rational_pow(rb, static_cast<std::uint64_t>(n - p));
  }
  const double out = to_double(sum);
  if (!std::isfinite(out)) {
    throw std::overflow_error("binomial_theorem_eval: value exceeds double range");
  }
  return out;
}

/// Stirling's approximation of n! together with the bound on the correction
/// exponent theta_n. With eta fixed at 0.01 the bound (1+eta)/(12n) holds for
/// every n >= 10 (validated exhaustively up to 200 by the acceptance suite).
struct StirlingApprox {
  double value;        ///< sqrt(2 pi n) (n/e)^n; +inf past double range (n > 170)
  double log_value;    ///< ln of the approximation, always finite
  double theta_bound;  ///< 1.01 / (12 n)
};

inline constexpr double kStirlingEta = 0.01;
inline constexpr std::int64_t kStirlingMinN = 10;

inline StirlingApprox stirling_approx(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("stirling_approx: n must be >= 1");
  }
  const double nd = static_cast<double>(n);
  const double log_value =
      0.5 * std::log(2.0 * std::numbers::pi * nd) + nd * (std::log(nd) - 1.0);
  return {std::exp(log_value), log_value, (1.0 + kStirlingEta) / (12.0 * nd)};
}

/// ln(n!) with absolute error <= 1e-10. Exact summation of ln k up to 256,
/// Stirling series with three correction terms above; the crossover keeps
/// both branches exercised by routine tests.
inline double log_factorial(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("log_factorial: n must be >= 0");
  }
  constexpr std::int64_t kCrossover = 256;
  if (n <= kCrossover) {
    static const std::vector<double> table = [] {
      std::vector<double> t(kCrossover + 1, 0.0);
      long double acc = 0.0L;
      for (std::int64_t k = 1; k <= kCrossover; ++k) {
        acc += std::log(static_cast<long double>(k));
        t[static_cast<std::size_t>(k)] = static_cast<double>(acc);
      }
      return t;
    }();
    return table[static_cast<std::size_t>(n)];
  }
  const double nd = static_cast<double>(n);
  const double inv = 1.0 / nd;
  const double inv2 = inv * inv;
  return (nd + 0.5) * std::log(nd) - nd + 0.5 * std::log(2.0 * std::numbers::pi) +
         inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0));
}

/// n-th term of the Wallis product 2^(4n) (n!)^4 / (n ((2n)!)^2); converges
/// to pi. Exact integer arithmetic through n = 10, log-space beyond.
inline double wallis_term(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("wallis_term: n must be >= 1");
  }
  if (n <= 10) {
    const BigInt f = factorial(n);
    const BigInt f2 = factorial(2 * n);
    const BigInt num = pow(BigInt(2), static_cast<unsigned>(4 * n)) * pow(f, 4);
    return to_double(Rational(num, n * f2 * f2));
  }
  const double nd = static_cast<double>(n);
  return std::exp(4.0 * nd * std::numbers::ln2 + 4.0 * log_factorial(n) -
                  std::log(nd) - 2.0 * log_factorial(2 * n));
}

}  // namespace probkit::combinatorics
