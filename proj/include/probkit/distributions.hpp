// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "probkit/combinatorics.hpp"
#include "probkit/exact.hpp"
#include "probkit/finite_rv.hpp"
#include "probkit/rng.hpp"
#include "probkit/special_functions.hpp"

namespace probkit::distributions {

// ---------------------------------------------------------------------------
// Law parameter records
// ---------------------------------------------------------------------------

struct Degenerate { double c; };
struct DiscreteUniform { std::int64_t n; };  ///< uniform on {1,...,n}
struct Bernoulli { double p; };
struct Binomial { std::int64_t n; double p; };
/// Urn with `total` balls of which `marked` are marked; `draws` taken without
/// replacement. theta = marked/total is derived, never stored.
struct Hypergeometric { std::int64_t total; std::int64_t marked; std::int64_t draws; };
struct Geometric { double p; };      ///< trials until first success, {1,2,...}
struct NumFailures { double p; };    ///< failures before first success, {0,1,...}
struct NegativeBinomial { std::int64_t successes; double p; };
struct Poisson { double lambda; };
struct Uniform { double a; double b; };
struct Exponential { double lambda; };
struct Gamma { double shape; double rate; };
struct Normal { double mean; double sigma2; };

using LawVariant =
    std::variant<Degenerate, DiscreteUniform, Bernoulli, Binomial, Hypergeometric,
                 Geometric, NumFailures, NegativeBinomial, Poisson, Uniform,
                 Exponential, Gamma, Normal>;

namespace detail {
inline void require_open_unit(double p, const char* law) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error(std::string(law) + ": p must lie strictly in (0,1)");
  }
}
template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

/// Tagged union over the cataloged probability laws. Construct through the
/// factories, which enforce the parameter domains.
class Law {
 public:
  static Law degenerate(double c) {
    if (!std::isfinite(c)) throw std::domain_error("degenerate: value must be finite");
    return Law(Degenerate{c});
  }
  static Law discrete_uniform(std::int64_t n) {
    if (n < 1) throw std::domain_error("discrete uniform: n must be >= 1");
    return Law(DiscreteUniform{n});
  }
  static Law bernoulli(double p) {
    detail::require_open_unit(p, "bernoulli");
    return Law(Bernoulli{p});
  }
  static Law binomial(std::int64_t n, double p) {
    if (n < 1) throw std::domain_error("binomial: size must be >= 1");
    detail::require_open_unit(p, "binomial");
    return Law(Binomial{n, p});
  }
  static Law hypergeometric(std::int64_t total, std::int64_t marked, std::int64_t draws) {
    if (total < 1 || marked < 0 || marked > total || draws < 1 || draws > total) {
      throw std::domain_error(
          "hypergeometric: need 0 <= marked <= total and 1 <= draws <= total");
    }
    return Law(Hypergeometric{total, marked, draws});
  }
  static Law geometric(double p) {
    detail::require_open_unit(p, "geometric");
    return Law(Geometric{p});
  }
  static Law num_failures(double p) {
    detail::require_open_unit(p, "num failures");
    return Law(NumFailures{p});
  }
  static Law negative_binomial(std::int64_t successes, double p) {
    if (successes < 1) throw std::domain_error("negative binomial: size must be >= 1");
    detail::require_open_unit(p, "negative binomial");
    return Law(NegativeBinomial{successes, p});
  }
  static Law poisson(double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("poisson: lambda must be positive");
    return Law(Poisson{lambda});
  }
  static Law uniform(double a, double b) {
    if (!(a < b)) throw std::domain_error("uniform: need min < max");
    return Law(Uniform{a, b});
  }
  static Law exponential(double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("exponential: rate must be positive");
    return Law(Exponential{lambda});
  }
  static Law gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
      throw std::domain_error("gamma: shape and rate must be positive");
    }
    return Law(Gamma{shape, rate});
  }
  static Law normal(double mean, double sigma2) {
    if (!(sigma2 > 0.0)) throw std::domain_error("normal: variance must be positive");
    return Law(Normal{mean, sigma2});
  }

  const LawVariant& value() const { return v_; }

  bool is_discrete() const { return v_.index() <= 8; }
  bool is_continuous() const { return !is_discrete(); }

  template <class T> const T* get_if() const { return std::get_if<T>(&v_); }

 private:
  explicit Law(LawVariant v) : v_(v) {}
  LawVariant v_;
};

/// Values set of a law, in the extended convention: the hypergeometric
/// range keeps 0..min(draws, marked) even when the lower masses vanish.
struct SupportDescriptor {
  enum class Kind { finite_integer_range, integer_from, real_interval, point };
  Kind kind;
  double lo;
  double hi;  ///< +infinity for unbounded-above kinds
};

inline SupportDescriptor support(const Law& law) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  using K = SupportDescriptor::Kind;
  return std::visit(
      detail::overloaded{
          [&](const Degenerate& l) { return SupportDescriptor{K::point, l.c, l.c}; },
          [&](const DiscreteUniform& l) {
            return SupportDescriptor{K::finite_integer_range, 1.0, double(l.n)};
          },
          [&](const Bernoulli&) {
            return SupportDescriptor{K::finite_integer_range, 0.0, 1.0};
          },
          [&](const Binomial& l) {
            return SupportDescriptor{K::finite_integer_range, 0.0, double(l.n)};
          },
          [&](const Hypergeometric& l) {
            return SupportDescriptor{K::finite_integer_range, 0.0,
                                     double(std::min(l.draws, l.marked))};
          },
          [&](const Geometric&) { return SupportDescriptor{K::integer_from, 1.0, inf}; },
          [&](const NumFailures&) { return SupportDescriptor{K::integer_from, 0.0, inf}; },
          [&](const NegativeBinomial& l) {
            return SupportDescriptor{K::integer_from, double(l.successes), inf};
          },
          [&](const Poisson&) { return SupportDescriptor{K::integer_from, 0.0, inf}; },
          [&](const Uniform& l) { return SupportDescriptor{K::real_interval, l.a, l.b}; },
          [&](const Exponential&) { return SupportDescriptor{K::real_interval, 0.0, inf}; },
          [&](const Gamma&) { return SupportDescriptor{K::real_interval, 0.0, inf}; },
          [&](const Normal&) { return SupportDescriptor{K::real_interval, -inf, inf}; }},
      law.value());
}

// ---------------------------------------------------------------------------
// pmf / pdf
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::int64_t kExactMassLimit = 60;

inline double log_choose(std::int64_t n, std::int64_t k) {
  namespace comb = probkit::combinatorics;
  return comb::log_factorial(n) - comb::log_factorial(k) - comb::log_factorial(n - k);
}

// C(n,k) p^k q^(n-k) in exact rational arithmetic over the exact binary
// values of p; q is 1-p computed as a rational so the masses sum to one.
inline Rational binomial_mass_exact(std::int64_t n, std::int64_t k, const Rational& p) {
  const Rational q = 1 - p;
  return Rational(combinatorics::combinations(n, k)) *
         rational_pow(p, static_cast<std::uint64_t>(k)) *
         rational_pow(q, static_cast<std::uint64_t>(n - k));
}

}  // namespace detail

/// Exact rational mass of the laws whose pmf is rational in the (exactly
/// stored) parameters. Poisson and the continuous laws have no such form.
inline Rational mass_exact(const Law& law, std::int64_t k) {
  return std::visit(
      detail::overloaded{
          [&](const Degenerate& l) -> Rational {
            return static_cast<double>(k) == l.c ? 1 : 0;
          },
          [&](const DiscreteUniform& l) -> Rational {
            return k >= 1 && k <= l.n ? Rational(1, l.n) : Rational(0);
          },
          [&](const Bernoulli& l) -> Rational {
            const Rational p = exact_from_double(l.p);
            if (k == 1) return p;
            if (k == 0) return 1 - p;
            return 0;
          },
          [&](const Binomial& l) -> Rational {
            if (k < 0 || k > l.n) return 0;
            return detail::binomial_mass_exact(l.n, k, exact_from_double(l.p));
          },
          [&](const Hypergeometric& l) -> Rational {
            if (k < 0 || k > l.draws || k > l.marked || l.draws - k > l.total - l.marked) {
              return 0;
            }
            namespace comb = probkit::combinatorics;
            return Rational(comb::combinations(l.marked, k) *
                                comb::combinations(l.total - l.marked, l.draws - k),
                            comb::combinations(l.total, l.draws));
          },
          [&](const Geometric& l) -> Rational {
            if (k < 1) return 0;
            const Rational p = exact_from_double(l.p);
            return p * rational_pow(1 - p, static_cast<std::uint64_t>(k - 1));
          },
          [&](const NumFailures& l) -> Rational {
            if (k < 0) return 0;
            const Rational p = exact_from_double(l.p);
            return p * rational_pow(1 - p, static_cast<std::uint64_t>(k));
          },
          [&](const NegativeBinomial& l) -> Rational {
            if (k < l.successes) return 0;
            const Rational p = exact_from_double(l.p);
            return Rational(combinatorics::combinations(k - 1, l.successes - 1)) *
                   rational_pow(p, static_cast<std::uint64_t>(l.successes)) *
                   rational_pow(1 - p, static_cast<std::uint64_t>(k - l.successes));
          },
          [&](const auto&) -> Rational {
            throw std::domain_error("mass_exact: law has no exact rational mass");
          }},
      law.value());
}

/// P(X = k) for discrete laws; 0 outside the support. Small parameter sets go
/// through exact rationals, larger ones through log space so lazy-student
/// scale inputs stay accurate to well below 1e-7.
inline double mass(const Law& law, std::int64_t k) {
  if (!law.is_discrete()) {
    throw std::domain_error("mass: law is continuous; use density");
  }
  return std::visit(
      detail::overloaded{
          [&](const Binomial& l) -> double {
            if (k < 0 || k > l.n) return 0.0;
            if (l.n <= detail::kExactMassLimit) return to_double(mass_exact(law, k));
            return std::exp(detail::log_choose(l.n, k) + k * std::log(l.p) +
                            (l.n - k) * std::log1p(-l.p));
          },
          [&](const Hypergeometric& l) -> double {
            if (k < 0 || k > l.draws || k > l.marked || l.draws - k > l.total - l.marked) {
              return 0.0;
            }
            if (l.total <= detail::kExactMassLimit) return to_double(mass_exact(law, k));
            return std::exp(detail::log_choose(l.marked, k) +
                            detail::log_choose(l.total - l.marked, l.draws - k) -
                            detail::log_choose(l.total, l.draws));
          },
          [&](const Geometric& l) -> double {
            return k < 1 ? 0.0 : l.p * std::pow(1.0 - l.p, double(k - 1));
          },
          [&](const NumFailures& l) -> double {
            return k < 0 ? 0.0 : l.p * std::pow(1.0 - l.p, double(k));
          },
          [&](const NegativeBinomial& l) -> double {
            if (k < l.successes) return 0.0;
            if (k <= detail::kExactMassLimit) return to_double(mass_exact(law, k));
            return std::exp(detail::log_choose(k - 1, l.successes - 1) +
                            l.successes * std::log(l.p) +
                            (k - l.successes) * std::log1p(-l.p));
          },
          [&](const Poisson& l) -> double {
            if (k < 0) return 0.0;
            return std::exp(k * std::log(l.lambda) - l.lambda -
                            combinatorics::log_factorial(k));
          },
          [&](const auto&) -> double { return to_double(mass_exact(law, k)); }},
      law.value());
}

/// pdf of a continuous law; 0 outside the support.
inline double density(const Law& law, double x) {
  if (!law.is_continuous()) {
    throw std::domain_error("density: law is discrete; use mass");
  }
  return std::visit(
      detail::overloaded{
          [&](const Uniform& l) -> double {
            return x >= l.a && x <= l.b ? 1.0 / (l.b - l.a) : 0.0;
          },
          [&](const Exponential& l) -> double {
            return x >= 0.0 ? l.lambda * std::exp(-l.lambda * x) : 0.0;
          },
          [&](const Gamma& l) -> double {
            if (x < 0.0) return 0.0;
            if (x == 0.0) {
              if (l.shape > 1.0) return 0.0;
              if (l.shape == 1.0) return l.rate;
              return std::numeric_limits<double>::infinity();
            }
            return std::exp(l.shape * std::log(l.rate) - special::log_gamma(l.shape) +
                            (l.shape - 1.0) * std::log(x) - l.rate * x);
          },
          [&](const Normal& l) -> double {
            const double sigma = std::sqrt(l.sigma2);
            return special::normal_pdf((x - l.mean) / sigma) / sigma;
          },
          [&](const auto&) -> double { return 0.0; /* unreachable */ }},
      law.value());
}

// ---------------------------------------------------------------------------
// cdf / quantile
// ---------------------------------------------------------------------------

namespace detail {

// Cumulative sum of masses from the first support point up to floor(x).
// Unbounded supports stop once the terms have fallen past the mode and below
// double resolution; the unimodal tails left behind are < 1e-15 in total.
inline double discrete_cdf_scan(const Law& law, double x, std::int64_t lo,
                                std::int64_t hi_or_minus1, double mode_hint = 0.0) {
  if (x < static_cast<double>(lo)) return 0.0;
  const double fx = std::floor(x);
  double cum = 0.0;
  for (std::int64_t k = lo;; ++k) {
    if (static_cast<double>(k) > fx) break;
    if (hi_or_minus1 >= 0 && k > hi_or_minus1) break;
    const double m = mass(law, k);
    cum += m;
    if (hi_or_minus1 < 0 && m < 1e-18 && static_cast<double>(k) >= mode_hint) break;
  }
  return std::min(cum, 1.0);
}

}  // namespace detail

/// P(X <= x). Right-continuous, non-decreasing, with limits 0 and 1.
inline double cdf(const Law& law, double x) {
  return std::visit(
      detail::overloaded{
          [&](const Degenerate& l) -> double { return x >= l.c ? 1.0 : 0.0; },
          [&](const DiscreteUniform& l) -> double {
            if (x < 1.0) return 0.0;
            const double k = std::min(std::floor(x), double(l.n));
            return k / double(l.n);
          },
          [&](const Bernoulli& l) -> double {
            if (x < 0.0) return 0.0;
            return x < 1.0 ? 1.0 - l.p : 1.0;
          },
          [&](const Binomial& l) -> double {
            return detail::discrete_cdf_scan(law, x, 0, l.n);
          },
          [&](const Hypergeometric& l) -> double {
            return detail::discrete_cdf_scan(law, x, 0, std::min(l.draws, l.marked));
          },
          [&](const Geometric& l) -> double {
            if (x < 1.0) return 0.0;
            return -std::expm1(std::floor(x) * std::log1p(-l.p));
          },
          [&](const NumFailures& l) -> double {
            if (x < 0.0) return 0.0;
            return -std::expm1((std::floor(x) + 1.0) * std::log1p(-l.p));
          },
          [&](const NegativeBinomial& l) -> double {
            return detail::discrete_cdf_scan(law, x, l.successes, -1,
                                             static_cast<double>(l.successes) / l.p);
          },
          [&](const Poisson& l) -> double {
            return detail::discrete_cdf_scan(law, x, 0, -1, l.lambda);
          },
          [&](const Uniform& l) -> double {
            if (x < l.a) return 0.0;
            return x > l.b ? 1.0 : (x - l.a) / (l.b - l.a);
          },
          [&](const Exponential& l) -> double {
            return x < 0.0 ? 0.0 : -std::expm1(-l.lambda * x);
          },
          [&](const Gamma& l) -> double {
            return x <= 0.0 ? 0.0
                            : special::regularized_incomplete_gamma(l.shape, l.rate * x);
          },
          [&](const Normal& l) -> double {
            return special::normal_cdf((x - l.mean) / std::sqrt(l.sigma2));
          }},
      law.value());
}

namespace detail {

inline double continuous_quantile_bisect(const Law& law, double s, double lo, double hi) {
  for (int iter = 0; iter < 500 && hi - lo > 1e-14 * (1.0 + std::fabs(lo) + std::fabs(hi));
       ++iter) {
    const double mid = 0.5 * (lo + hi);
    (cdf(law, mid) >= s ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double discrete_quantile_scan(const Law& law, double s, std::int64_t lo,
                                     std::int64_t hi_or_minus1, double mode_hint = 0.0) {
  double cum = 0.0;
  for (std::int64_t k = lo;; ++k) {
    const double m = mass(law, k);
    cum += m;
    if (cum >= s) return static_cast<double>(k);
    if (hi_or_minus1 >= 0 && k >= hi_or_minus1) return static_cast<double>(hi_or_minus1);
    // Past the mode with vanishing terms the accumulated cdf has saturated in
    // double precision; no later point can reach s either.
    if (hi_or_minus1 < 0 && m < 1e-18 && static_cast<double>(k) >= mode_hint) {
      return static_cast<double>(k);
    }
  }
}

}  // namespace detail

/// Generalized inverse inf{x : F(x) >= s} for s in (0,1). For discrete laws
/// this is the smallest support point whose cumulative probability reaches s.
inline double quantile(const Law& law, double s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error("quantile: s must lie strictly in (0,1)");
  }
  return std::visit(
      detail::overloaded{
          [&](const Degenerate& l) -> double { return l.c; },
          [&](const DiscreteUniform& l) -> double {
            // smallest k with k/n >= s, pinned to the same division the cdf
            // performs so boundary values round-trip
            const double n = static_cast<double>(l.n);
            double k = std::min(std::max(std::ceil(s * n), 1.0), n);
            while (k > 1.0 && (k - 1.0) / n >= s) k -= 1.0;
            while (k < n && k / n < s) k += 1.0;
            return k;
          },
          [&](const Bernoulli& l) -> double { return s <= 1.0 - l.p ? 0.0 : 1.0; },
          [&](const Binomial& l) -> double {
            return detail::discrete_quantile_scan(law, s, 0, l.n);
          },
          [&](const Hypergeometric& l) -> double {
            return detail::discrete_quantile_scan(law, s, 0, std::min(l.draws, l.marked));
          },
          [&](const Geometric& l) -> double {
            // smallest n >= 1 with 1 - q^n >= s
            double n = std::ceil(std::log1p(-s) / std::log1p(-l.p));
            if (n < 1.0) n = 1.0;
            while (n > 1.0 && cdf(law, n - 1.0) >= s) n -= 1.0;
            while (cdf(law, n) < s) n += 1.0;
            return n;
          },
          [&](const NumFailures& l) -> double {
            double n = std::ceil(std::log1p(-s) / std::log1p(-l.p) - 1.0);
            if (n < 0.0) n = 0.0;
            while (n > 0.0 && cdf(law, n - 1.0) >= s) n -= 1.0;
            while (cdf(law, n) < s) n += 1.0;
            return n;
          },
          [&](const NegativeBinomial& l) -> double {
            return detail::discrete_quantile_scan(law, s, l.successes, -1,
                                                  static_cast<double>(l.successes) / l.p);
          },
          [&](const Poisson& l) -> double {
            return detail::discrete_quantile_scan(law, s, 0, -1, l.lambda);
          },
          [&](const Uniform& l) -> double { return l.a + s * (l.b - l.a); },
          [&](const Exponential& l) -> double { return -std::log1p(-s) / l.lambda; },
          [&](const Gamma& l) -> double {
            double hi = (l.shape + 10.0 * std::sqrt(l.shape) + 10.0) / l.rate;
            while (cdf(law, hi) < s) hi *= 2.0;
            return detail::continuous_quantile_bisect(law, s, 0.0, hi);
          },
          [&](const Normal& l) -> double {
            const double sigma = std::sqrt(l.sigma2);
            return detail::continuous_quantile_bisect(law, s, l.mean - 45.0 * sigma,
                                                      l.mean + 45.0 * sigma);
          }},
      law.value());
}

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

inline double mean(const Law& law) {
  return std::visit(
      detail::overloaded{
          [](const Degenerate& l) { return l.c; },
          [](const DiscreteUniform& l) { return (double(l.n) + 1.0) / 2.0; },
          [](const Bernoulli& l) { return l.p; },
          [](const Binomial& l) { return double(l.n) * l.p; },
          [](const Hypergeometric& l) {
            return double(l.draws) * double(l.marked) / double(l.total);
          },
          [](const Geometric& l) { return 1.0 / l.p; },
          [](const NumFailures& l) { return (1.0 - l.p) / l.p; },
          [](const NegativeBinomial& l) { return double(l.successes) / l.p; },
          [](const Poisson& l) { return l.lambda; },
          [](const Uniform& l) { return 0.5 * (l.a + l.b); },
          [](const Exponential& l) { return 1.0 / l.lambda; },
          [](const Gamma& l) { return l.shape / l.rate; },
          [](const Normal& l) { return l.mean; }},
      law.value());
}

inline double variance(const Law& law) {
  return std::visit(
      detail::overloaded{
          [](const Degenerate&) { return 0.0; },
          [](const DiscreteUniform& l) {
            const double n = double(l.n);
            return (n * n - 1.0) / 12.0;
          },
          [](const Bernoulli& l) { return l.p * (1.0 - l.p); },
          [](const Binomial& l) { return double(l.n) * l.p * (1.0 - l.p); },
          [](const Hypergeometric& l) {
            // r theta (1-theta) (N-r)/(N-1), forced by the factorial-moment
            // identity and the urn enumeration.
            const double theta = double(l.marked) / double(l.total);
            if (l.total == 1) return 0.0;
            return double(l.draws) * theta * (1.0 - theta) *
                   (double(l.total - l.draws) / double(l.total - 1));
          },
          [](const Geometric& l) { return (1.0 - l.p) / (l.p * l.p); },
          [](const NumFailures& l) { return (1.0 - l.p) / (l.p * l.p); },
          [](const NegativeBinomial& l) {
            return double(l.successes) * (1.0 - l.p) / (l.p * l.p);
          },
          [](const Poisson& l) { return l.lambda; },
          [](const Uniform& l) { return (l.b - l.a) * (l.b - l.a) / 12.0; },
          [](const Exponential& l) { return 1.0 / (l.lambda * l.lambda); },
          [](const Gamma& l) { return l.shape / (l.rate * l.rate); },
          [](const Normal& l) { return l.sigma2; }},
      law.value());
}

/// E[X(X-1)], closed form, discrete laws only.
inline double factorial_moment2(const Law& law) {
  if (!law.is_discrete()) {
    throw std::domain_error("factorial_moment2: law is continuous");
  }
  return std::visit(
      detail::overloaded{
          [](const Degenerate& l) { return l.c * (l.c - 1.0); },
          [](const DiscreteUniform& l) {
            const double n = double(l.n);
            return (n * n - 1.0) / 3.0;
          },
          [](const Bernoulli&) { return 0.0; },
          [](const Binomial& l) { return double(l.n) * double(l.n - 1) * l.p * l.p; },
          [](const Hypergeometric& l) {
            if (l.total == 1) return 0.0;
            return double(l.marked) * double(l.marked - 1) * double(l.draws) *
                   double(l.draws - 1) / (double(l.total) * double(l.total - 1));
          },
          [](const Geometric& l) { return 2.0 * (1.0 - l.p) / (l.p * l.p); },
          [](const NumFailures& l) {
            const double q = 1.0 - l.p;
            return 2.0 * q * q / (l.p * l.p);
          },
          [](const NegativeBinomial& l) {
            const double k = double(l.successes);
            return k * (k + 1.0 - 2.0 * l.p) / (l.p * l.p);
          },
          [](const Poisson& l) { return l.lambda * l.lambda; },
          [](const auto&) { return 0.0; /* unreachable */ }},
      law.value());
}

inline MomentSummary summarize(const Law& law) {
  const double m = mean(law);
  const double v = variance(law);
  const double fm2 =
      law.is_discrete() ? factorial_moment2(law) : v + m * m - m;  // E[X^2] - E[X]
  return {m, v, std::sqrt(v), fm2};
}

// ---------------------------------------------------------------------------
// Moment generating functions
// ---------------------------------------------------------------------------

namespace detail {

// Geometric-family convergence constraint: q e^s < 1, boundary excluded.
inline void require_mgf_domain(double p, double s) {
  if (s >= -std::log1p(-p)) {
    throw std::domain_error("mgf: s must satisfy s < -log(1-p)");
  }
}

}  // namespace detail

/// First moment generating function E[e^{sX}] in closed form;
/// mgf(law, 0) = 1 for every law.
inline double mgf(const Law& law, double s) {
  return std::visit(
      detail::overloaded{
          [&](const Degenerate& l) { return std::exp(l.c * s); },
          [&](const DiscreteUniform& l) {
            // e^s (e^{ns}-1) / (n (e^s-1)), the geometric-sum form.
            if (s == 0.0) return 1.0;
            return std::exp(s) * std::expm1(double(l.n) * s) /
                   (double(l.n) * std::expm1(s));
          },
          [&](const Bernoulli& l) { return 1.0 - l.p + l.p * std::exp(s); },
          [&](const Binomial& l) {
            return std::pow(1.0 - l.p + l.p * std::exp(s), double(l.n));
          },
          [&](const Hypergeometric& l) {
            // finite support: exact sum of mass(k) e^{sk}
            double sum = 0.0;
            for (std::int64_t k = 0; k <= std::min(l.draws, l.marked); ++k) {
              sum += mass(law, k) * std::exp(s * double(k));
            }
            return sum;
          },
          [&](const Geometric& l) {
            detail::require_mgf_domain(l.p, s);
            const double es = std::exp(s);
            return l.p * es / (1.0 - (1.0 - l.p) * es);
          },
          [&](const NumFailures& l) {
            detail::require_mgf_domain(l.p, s);
            return l.p / (1.0 - (1.0 - l.p) * std::exp(s));
          },
          [&](const NegativeBinomial& l) {
            detail::require_mgf_domain(l.p, s);
            const double es = std::exp(s);
            return std::pow(l.p * es / (1.0 - (1.0 - l.p) * es), double(l.successes));
          },
          [&](const Poisson& l) { return std::exp(l.lambda * std::expm1(s)); },
          [&](const Uniform& l) {
            if (s == 0.0) return 1.0;
            return std::exp(l.a * s) * std::expm1((l.b - l.a) * s) / (s * (l.b - l.a));
          },
          [&](const Exponential& l) {
            if (s >= l.lambda) throw std::domain_error("mgf: s must satisfy s < rate");
            return l.lambda / (l.lambda - s);
          },
          [&](const Gamma& l) {
            if (s >= l.rate) throw std::domain_error("mgf: s must satisfy s < rate");
            return std::exp(-l.shape * std::log1p(-s / l.rate));
          },
          [&](const Normal& l) {
            return std::exp(l.mean * s + 0.5 * l.sigma2 * s * s);
          }},
      law.value());
}

/// MGF of aX+b: e^{bs} mgf(law, as).
inline double mgf_affine(const Law& law, double a, double b, double s) {
  return std::exp(b * s) * mgf(law, a * s);
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// i.i.d. draws: inverse transform through the quantile for continuous laws,
/// cumulative scan for discrete ones. Deterministic given the Rng seed.
inline std::vector<double> sample(const Law& law, Rng& rng, std::size_t count) {
  if (count == 0) {
    throw std::domain_error("sample: count must be >= 1");
  }
  std::vector<double> draws;
  draws.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.next_unit();
    if (law.is_continuous()) {
      draws.push_back(quantile(law, u));
    } else if (const auto* d = law.get_if<Degenerate>()) {
      draws.push_back(d->c);
    } else {
      const SupportDescriptor sup = support(law);
      const std::int64_t lo = static_cast<std::int64_t>(sup.lo);
      const std::int64_t hi =
          sup.kind == SupportDescriptor::Kind::finite_integer_range
              ? static_cast<std::int64_t>(sup.hi)
              : -1;
      draws.push_back(detail::discrete_quantile_scan(law, u, lo, hi, mean(law)));
    }
  }
  return draws;
}

// ---------------------------------------------------------------------------
// JSON form, R-style parameter names
// ---------------------------------------------------------------------------

inline std::string law_name(const Law& law) {
  return std::visit(
      detail::overloaded{[](const Degenerate&) { return "degenerate"; },
                         [](const DiscreteUniform&) { return "dunif"; },
                         [](const Bernoulli&) { return "bern"; },
                         [](const Binomial&) { return "binom"; },
                         [](const Hypergeometric&) { return "hyper"; },
                         [](const Geometric&) { return "geom"; },
                         [](const NumFailures&) { return "nfail"; },
                         [](const NegativeBinomial&) { return "nbinom"; },
                         [](const Poisson&) { return "pois"; },
                         [](const Uniform&) { return "unif"; },
                         [](const Exponential&) { return "exp"; },
                         [](const Gamma&) { return "gamma"; },
                         [](const Normal&) { return "norm"; }},
      law.value());
}

/// {"law":"binom","size":20,"prob":0.25} and friends; hyper uses the urn
/// triplet m (marked), n (unmarked), k (draws).
inline nlohmann::json law_to_json(const Law& law) {
  nlohmann::json j;
  j["law"] = law_name(law);
  std::visit(detail::overloaded{
                 [&](const Degenerate& l) { j["value"] = l.c; },
                 [&](const DiscreteUniform& l) { j["n"] = l.n; },
                 [&](const Bernoulli& l) { j["prob"] = l.p; },
                 [&](const Binomial& l) {
                   j["size"] = l.n;
                   j["prob"] = l.p;
                 },
                 [&](const Hypergeometric& l) {
                   j["m"] = l.marked;
                   j["n"] = l.total - l.marked;
                   j["k"] = l.draws;
                 },
                 [&](const Geometric& l) { j["prob"] = l.p; },
                 [&](const NumFailures& l) { j["prob"] = l.p; },
                 [&](const NegativeBinomial& l) {
                   j["size"] = l.successes;
                   j["prob"] = l.p;
                 },
                 [&](const Poisson& l) { j["lambda"] = l.lambda; },
                 [&](const Uniform& l) {
                   j["min"] = l.a;
                   j["max"] = l.b;
                 },
                 [&](const Exponential& l) { j["rate"] = l.lambda; },
                 [&](const Gamma& l) {
                   j["shape"] = l.shape;
                   j["scale"] = 1.0 / l.rate;
                 },
                 [&](const Normal& l) {
                   j["mean"] = l.mean;
                   j["sd"] = std::sqrt(l.sigma2);
                 }},
             law.value());
  return j;
}

inline Law law_from_json(const nlohmann::json& j) {
  const std::string name = j.at("law").get<std::string>();
  const auto num = [&](const char* key) { return j.at(key).get<double>(); };
  const auto integer = [&](const char* key) { return j.at(key).get<std::int64_t>(); };
  if (name == "degenerate") return Law::degenerate(num("value"));
  if (name == "dunif") return Law::discrete_uniform(integer("n"));
  if (name == "bern") return Law::bernoulli(num("prob"));
  if (name == "binom") return Law::binomial(integer("size"), num("prob"));
  if (name == "hyper") {
    const std::int64_t m = integer("m");
    return Law::hypergeometric(m + integer("n"), m, integer("k"));
  }
  if (name == "geom") return Law::geometric(num("prob"));
  if (name == "nfail") return Law::num_failures(num("prob"));
  if (name == "nbinom") return Law::negative_binomial(integer("size"), num("prob"));
  if (name == "pois") return Law::poisson(num("lambda"));
  if (name == "unif") return Law::uniform(num("min"), num("max"));
  if (name == "exp") return Law::exponential(num("rate"));
  if (name == "gamma") {
    const double rate = j.contains("rate") ? num("rate") : 1.0 / num("scale");
    return Law::gamma(num("shape"), rate);
  }
  if (name == "norm") {
    const double sd = num("sd");
    return Law::normal(num("mean"), sd * sd);
  }
  throw std::invalid_argument("unknown law name: '" + name + "'");
}

}  // namespace probkit::distributions
