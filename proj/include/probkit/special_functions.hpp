// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace probkit::special {

inline constexpr double kSqrt2Pi = 2.5066282746310005024;

inline double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / kSqrt2Pi;
}

/// Standard normal CDF. Absolute error well below the 1e-10 contract; the
/// independent midpoint-rule integral in `limits` cross-checks it.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0);
}

/// ln Gamma(a) for a > 0, relative error <= 1e-10.
inline double log_gamma(double a) {
  if (!(a > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  return std::lgamma(a);
}

namespace detail {

// Lower-tail series: P(a,x) = x^a e^-x / Gamma(a) * sum x^k / (a(a+1)...(a+k)).
inline double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(a * std::log(x) - x - log_gamma(a));
}

// Upper-tail continued fraction (modified Lentz).
inline double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(a * std::log(x) - x - log_gamma(a));
}

}  // namespace detail

/// Regularized lower incomplete gamma P(a,x) in [0,1], non-decreasing in x.
inline double regularized_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) {
    throw std::domain_error("regularized_incomplete_gamma: a must be positive");
  }
  if (x < 0.0) {
    throw std::domain_error("regularized_incomplete_gamma: x must be >= 0");
  }
  if (x == 0.0) return 0.0;
  const double p = x < a + 1.0 ? detail::gamma_p_series(a, x)
                               : 1.0 - detail::gamma_q_cf(a, x);
  return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

}  // namespace probkit::special
