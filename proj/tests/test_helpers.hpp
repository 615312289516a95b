// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "probkit/couples.hpp"
#include "probkit/exact.hpp"
#include "probkit/finite_rv.hpp"
#include "probkit/rng.hpp"

namespace probkit::testing {

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

/// Random rational in (0,1): k/denom with 1 <= k < denom.
inline Rational random_unit_rational(Rng& rng, std::uint64_t max_denominator = 64) {
  const std::uint64_t den = 2 + rng.next_u64() % (max_denominator - 1);
  const std::uint64_t num = 1 + rng.next_u64() % (den - 1);
  return Rational(num, den);
}

/// Random probability vector of the given size, exact rationals summing to 1.
inline std::vector<Rational> random_prob_vector(Rng& rng, std::size_t size,
                                                std::uint64_t max_part = 20) {
  std::vector<std::uint64_t> parts(size);
  std::uint64_t total = 0;
  for (auto& part : parts) {
    part = 1 + rng.next_u64() % max_part;
    total += part;
  }
  std::vector<Rational> probs;
  probs.reserve(size);
  for (std::uint64_t part : parts) probs.emplace_back(part, total);
  return probs;
}

/// Random finite rv on small distinct integer values.
inline FiniteRv random_finite_rv(Rng& rng, std::size_t size) {
  std::vector<double> values;
  std::int64_t v = -static_cast<std::int64_t>(rng.next_u64() % 5) - 1;
  for (std::size_t i = 0; i < size; ++i) {
    v += 1 + static_cast<std::int64_t>(rng.next_u64() % 3);
    values.push_back(static_cast<double>(v));
  }
  return FiniteRv{std::move(values), random_prob_vector(rng, size)};
}

/// Random joint law on strictly increasing small integer grids.
inline couples::JointLaw random_joint(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<double> xs, ys;
  std::int64_t v = -3;
  for (std::size_t i = 0; i < rows; ++i) {
    v += 1 + static_cast<std::int64_t>(rng.next_u64() % 2);
    xs.push_back(static_cast<double>(v));
  }
  v = -2;
  for (std::size_t j = 0; j < cols; ++j) {
    v += 1 + static_cast<std::int64_t>(rng.next_u64() % 2);
    ys.push_back(static_cast<double>(v));
  }
  const std::vector<Rational> flat = random_prob_vector(rng, rows * cols);
  std::vector<std::vector<Rational>> cells(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cells[i][j] = flat[i * cols + j];
  }
  return couples::make_joint(std::move(xs), std::move(ys), std::move(cells));
}

/// E[e^{s X}] of a finite rv, by direct summation.
inline double finite_rv_mgf(const FiniteRv& rv, double s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rv.values.size(); ++i) {
    sum += to_double(rv.probs[i]) * std::exp(s * rv.values[i]);
  }
  return sum;
}

}  // namespace probkit::testing
