// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "probkit/couples.hpp"
#include "probkit/exact.hpp"
#include "probkit/finite_rv.hpp"

namespace probkit::moments {

/// A random couple carried by its joint law.
struct PairedRv {
  couples::JointLaw joint;
};

// Sums run in rational arithmetic (double inputs taken exactly), converting
// to double only at the boundary; the linearity and tower identities are then
// exact, not approximate.

inline Rational expectation_exact(const FiniteRv& rv) {
  Rational sum = 0;
  for (std::size_t i = 0; i < rv.values.size(); ++i) {
    sum += exact_from_double(rv.values[i]) * rv.probs[i];
  }
  return sum;
}

inline double expectation(const FiniteRv& rv) { return to_double(expectation_exact(rv)); }

inline Rational expectation_of_function_exact(const FiniteRv& rv,
                                              const std::function<double(double)>& g) {
  Rational sum = 0;
  for (std::size_t i = 0; i < rv.values.size(); ++i) {
    sum += exact_from_double(g(rv.values[i])) * rv.probs[i];
  }
  return sum;
}

inline double expectation_of_function(const FiniteRv& rv,
                                      const std::function<double(double)>& g) {
  return to_double(expectation_of_function_exact(rv, g));
}

inline Rational variance_exact(const FiniteRv& rv) {
  const Rational m = expectation_exact(rv);
  Rational sum = 0;
  for (std::size_t i = 0; i < rv.values.size(); ++i) {
    const Rational d = exact_from_double(rv.values[i]) - m;
    sum += d * d * rv.probs[i];
  }
  return sum;
}

inline double variance_of(const FiniteRv& rv) { return to_double(variance_exact(rv)); }

inline Rational covariance_exact(const PairedRv& pair) {
  const couples::JointLaw& joint = pair.joint;
  Rational exy = 0;
  for (std::size_t i = 0; i < joint.x_values.size(); ++i) {
    for (std::size_t j = 0; j < joint.y_values.size(); ++j) {
      exy += exact_from_double(joint.x_values[i]) * exact_from_double(joint.y_values[j]) *
             joint.p[i][j];
    }
  }
  return exy - expectation_exact(couples::marginal_x(joint)) *
                   expectation_exact(couples::marginal_y(joint));
}

inline double covariance(const PairedRv& pair) { return to_double(covariance_exact(pair)); }

inline double correlation(const PairedRv& pair) {
  const double sx = std::sqrt(to_double(variance_exact(couples::marginal_x(pair.joint))));
  const double sy = std::sqrt(to_double(variance_exact(couples::marginal_y(pair.joint))));
  if (sx == 0.0 || sy == 0.0) {
    throw std::domain_error("correlation: a marginal has zero standard deviation");
  }
  return covariance(pair) / (sx * sy);
}

/// Var(sum a_i X_i) = sum a_i^2 Var(X_i) + 2 sum_{i<j} a_i a_j Cov(X_i,X_j),
/// from the full covariance matrix (diagonal holds the variances).
inline double variance_of_linear_combination(const std::vector<std::vector<double>>& covs,
                                             const std::vector<double>& coeffs) {
  const std::size_t n = coeffs.size();
  if (covs.size() != n) {
    throw std::invalid_argument("variance_of_linear_combination: dimension mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (covs[i].size() != n) {
      throw std::invalid_argument("variance_of_linear_combination: matrix is not square");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (covs[i][j] != covs[j][i]) {
        throw std::invalid_argument("variance_of_linear_combination: matrix is not symmetric");
      }
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += coeffs[i] * coeffs[i] * covs[i][i];
    for (std::size_t j = i + 1; j < n; ++j) {
      total += 2.0 * coeffs[i] * coeffs[j] * covs[i][j];
    }
  }
  return total;
}

/// Markov bound on P(Y > lambda E(Y)) for nonnegative Y: 1/lambda, clipped to 1.
inline double markov_bound(double mean_of_nonneg, double lambda) {
  if (!(mean_of_nonneg > 0.0)) {
    throw std::domain_error("markov_bound: mean must be positive");
  }
  if (!(lambda > 0.0)) {
    throw std::domain_error("markov_bound: lambda must be positive");
  }
  return std::min(1.0, 1.0 / lambda);
}

/// Tchebychev (1-alpha)-confidence interval [m - sigma/sqrt(alpha), m + ...].
inline std::pair<double, double> tchebychev_interval(double mean, double sigma,
                                                     double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("tchebychev_interval: alpha must lie in (0,1)");
  }
  if (sigma < 0.0) {
    throw std::domain_error("tchebychev_interval: sigma must be >= 0");
  }
  const double half = sigma / std::sqrt(alpha);
  return {mean - half, mean + half};
}

/// Relative variation coefficient |sigma/mean|.
inline double rvc(double mean, double sigma) {
  if (mean == 0.0) {
    throw std::domain_error("rvc: mean must be nonzero");
  }
  if (sigma < 0.0) {
    throw std::domain_error("rvc: sigma must be >= 0");
  }
  return std::fabs(sigma / mean);
}

/// Right-minus-left sides of the classical inequalities, evaluated on a
/// couple; every field is >= 0 (up to roundoff) when the preconditions hold.
struct InequalityGaps {
  double cauchy_schwarz;  ///< sigma_X sigma_Y - |Cov(X,Y)|
  double holder;          ///< ||X||_p ||Y||_q - E|XY|
  double minkowski;       ///< ||X||_p + ||Y||_p - ||X+Y||_p
  double jensen;          ///< E g(X) - g(E X), g convex
};

inline InequalityGaps inequality_gaps(const PairedRv& pair, double p, double q,
                                      const std::function<double(double)>& g) {
  if (!(p > 1.0) || !(q > 1.0) || std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
    throw std::domain_error("inequality_gaps: p and q must be conjugate exponents > 1");
  }
  const couples::JointLaw& joint = pair.joint;
  const FiniteRv mx = couples::marginal_x(joint);
  const FiniteRv my = couples::marginal_y(joint);

  const double sx = std::sqrt(to_double(variance_exact(mx)));
  const double sy = std::sqrt(to_double(variance_exact(my)));
  const double cs_gap = sx * sy - std::fabs(covariance(pair));

  double e_abs_xy = 0.0, norm_x_p = 0.0, norm_y_q = 0.0, norm_x_pp = 0.0,
         norm_y_pp = 0.0, norm_sum_pp = 0.0;
  for (std::size_t i = 0; i < joint.x_values.size(); ++i) {
    for (std::size_t j = 0; j < joint.y_values.size(); ++j) {
      const double w = to_double(joint.p[i][j]);
      const double x = joint.x_values[i];
      const double y = joint.y_values[j];
      e_abs_xy += w * std::fabs(x * y);
      norm_sum_pp += w * std::pow(std::fabs(x + y), p);
    }
  }
  for (std::size_t i = 0; i < mx.values.size(); ++i) {
    const double w = to_double(mx.probs[i]);
    norm_x_p += w * std::pow(std::fabs(mx.values[i]), p);
    norm_x_pp += w * std::pow(std::fabs(mx.values[i]), p);
  }
  for (std::size_t j = 0; j < my.values.size(); ++j) {
    const double w = to_double(my.probs[j]);
    norm_y_q += w * std::pow(std::fabs(my.values[j]), q);
    norm_y_pp += w * std::pow(std::fabs(my.values[j]), p);
  }
  const double holder_gap =
      std::pow(norm_x_p, 1.0 / p) * std::pow(norm_y_q, 1.0 / q) - e_abs_xy;
  const double minkowski_gap = std::pow(norm_x_pp, 1.0 / p) +
                               std::pow(norm_y_pp, 1.0 / p) -
                               std::pow(norm_sum_pp, 1.0 / p);
  const double jensen_gap =
      expectation_of_function(mx, g) - g(expectation(mx));
  return {cs_gap, holder_gap, minkowski_gap, jensen_gap};
}

inline MomentSummary summarize(const FiniteRv& rv) {
  const double m = expectation(rv);
  const double v = variance_of(rv);
  const double fm2 =
      expectation_of_function(rv, [](double x) { return x * (x - 1.0); });
  return {m, v, std::sqrt(v), fm2};
}

}  // namespace probkit::moments
