// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "probkit/distributions.hpp"
#include "probkit/special_functions.hpp"

namespace probkit::limits {

/// Outcome of one convergence measurement at sample size n.
struct LimitReport {
  struct Row {
    double coordinate;  ///< k, j, or standardized position, per operation
    double actual;
    double reference;
    double error;
  };
  std::int64_t n;
  double metric;  ///< sup or absolute error, >= 0
  std::vector<Row> detail;
};

/// Covers all Poisson mass above ~1e-14 for the comparison window.
inline std::int64_t default_poisson_kmax(double lambda) {
  return static_cast<std::int64_t>(std::ceil(lambda + 12.0 * std::sqrt(lambda) + 20.0));
}

/// sup_k |Binomial(n, lambda/n)(k) - Poisson(lambda)(k)| over 0..k_max.
inline LimitReport binomial_poisson_distance(std::int64_t n, double lambda,
                                             std::int64_t k_max = -1) {
  if (n < 1 || !(lambda > 0.0) || !(lambda / static_cast<double>(n) < 1.0)) {
    throw std::domain_error("binomial_poisson_distance: need n >= 1 and lambda/n < 1");
  }
  if (k_max < 0) k_max = default_poisson_kmax(lambda);
  const auto binom = distributions::Law::binomial(n, lambda / static_cast<double>(n));
  const auto pois = distributions::Law::poisson(lambda);
  LimitReport report{n, 0.0, {}};
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const double fb = distributions::mass(binom, k);
    const double fp = distributions::mass(pois, k);
    const double err = std::fabs(fb - fp);
    report.detail.push_back({static_cast<double>(k), fb, fp, err});
    report.metric = std::max(report.metric, err);
  }
  return report;
}

/// Local limit: max over integers j with (j-np)/sqrt(npq) in [a,b] of
/// |P(X_n = j) sqrt(2 pi npq) e^{x^2/2} - 1|.
inline LimitReport local_limit_ratio_error(std::int64_t n, double p, double a, double b) {
  if (n < 1 || !(p > 0.0 && p < 1.0) || !(a <= b)) {
    throw std::domain_error("local_limit_ratio_error: need n >= 1, p in (0,1), a <= b");
  }
  const double np = static_cast<double>(n) * p;
  const double sd = std::sqrt(np * (1.0 - p));
  const std::int64_t j_lo =
      static_cast<std::int64_t>(std::ceil(np + a * sd));
  const std::int64_t j_hi =
      static_cast<std::int64_t>(std::floor(np + b * sd));
  if (j_lo > j_hi || j_hi < 0 || j_lo > n) {
    throw std::domain_error("local_limit_ratio_error: no integer falls in the window");
  }
  const auto binom = distributions::Law::binomial(n, p);
  LimitReport report{n, 0.0, {}};
  for (std::int64_t j = std::max<std::int64_t>(j_lo, 0); j <= std::min(j_hi, n); ++j) {
    const double x = (static_cast<double>(j) - np) / sd;
    const double ratio = distributions::mass(binom, j) * special::kSqrt2Pi * sd *
                         std::exp(0.5 * x * x);
    const double err = std::fabs(ratio - 1.0);
    report.detail.push_back({x, ratio, 1.0, err});
    report.metric = std::max(report.metric, err);
  }
  return report;
}

/// Integral limit: |P(a <= Z_n <= b) - (Phi(b) - Phi(a))| with
/// Z_n = (X_n - np)/sqrt(npq) and the window closed on both ends. The lattice
/// masses accumulate outward from np (smallest terms first) and the normal
/// window mass uses the odd erf form, so mirror-image windows of a symmetric
/// binomial produce bitwise-identical errors.
inline LimitReport clt_interval_error(std::int64_t n, double p, double a, double b) {
  if (n < 1 || !(p > 0.0 && p < 1.0) || !(a < b)) {
    throw std::domain_error("clt_interval_error: need n >= 1, p in (0,1), a < b");
  }
  const double np = static_cast<double>(n) * p;
  const double sd = std::sqrt(np * (1.0 - p));
  const auto binom = distributions::Law::binomial(n, p);
  const std::int64_t j_lo =
      std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(np + a * sd)));
  const std::int64_t j_hi =
      std::min<std::int64_t>(n, static_cast<std::int64_t>(std::floor(np + b * sd)));
  std::vector<double> masses;
  masses.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, j_hi - j_lo + 1)));
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    masses.push_back(distributions::mass(binom, j));
  }
  std::sort(masses.begin(), masses.end());
  double binom_sum = 0.0;
  for (double m : masses) binom_sum += m;
  const double half_sqrt2 = std::numbers::sqrt2 / 2.0;
  const double normal = 0.5 * (std::erf(b * half_sqrt2) - std::erf(a * half_sqrt2));
  LimitReport report{n, std::fabs(binom_sum - normal), {}};
  report.detail.push_back({a, binom_sum, normal, report.metric});
  return report;
}

/// Midpoint Riemann sum of the standard normal density on [a,b]; the
/// independent oracle that validates normal_cdf.
inline double riemann_normal_integral(double a, double b, std::int64_t steps) {
  if (!(a <= b) || steps < 1) {
    throw std::domain_error("riemann_normal_integral: need a <= b and steps >= 1");
  }
  const double h = (b - a) / static_cast<double>(steps);
  double sum = 0.0;
  for (std::int64_t i = 0; i < steps; ++i) {
    const double t = a + (static_cast<double>(i) + 0.5) * h;
    sum += std::exp(-0.5 * t * t);
  }
  return sum * h / special::kSqrt2Pi;
}

}  // namespace probkit::limits
