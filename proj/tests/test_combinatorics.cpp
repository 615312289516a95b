// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "probkit/combinatorics.hpp"
#include "probkit/rng.hpp"
#include "test_helpers.hpp"

using namespace probkit;
namespace comb = probkit::combinatorics;
using probkit::testing::close;

namespace {

// Brute-force count of ordered p-tuples of distinct elements from {0..n-1}.
std::int64_t enumerate_arrangements(int n, int p) {
  std::int64_t count = 0;
  std::vector<int> tuple(p, -1);
  const auto walk = [&](auto&& self, int depth) -> void {
    if (depth == p) {
      ++count;
      return;
    }
    for (int value = 0; value < n; ++value) {
      if (std::find(tuple.begin(), tuple.begin() + depth, value) !=
          tuple.begin() + depth) {
        continue;
      }
      tuple[depth] = value;
      self(self, depth + 1);
    }
  };
  walk(walk, 0);
  return count;
}

// Brute-force count of p-subsets of an n-set via bitmasks.
std::int64_t enumerate_subsets(int n, int p) {
  std::int64_t count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == p) ++count;
  }
  return count;
}

// Count of visibly distinct orderings of a multiset word.
std::int64_t enumerate_visible_orderings(std::string word) {
  std::sort(word.begin(), word.end());
  std::int64_t count = 0;
  do {
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

}  // namespace

TEST_CASE("factorial basics", "[combinatorics]") {
  CHECK(comb::factorial(0) == 1);
  CHECK(comb::factorial(5) == 120);
  CHECK(comb::factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(comb::factorial(-1), std::domain_error);
  CHECK_THROWS_AS(comb::factorial(11, 10), std::length_error);
  CHECK_NOTHROW(comb::factorial(11, 11));
}

TEST_CASE("arrangements", "[combinatorics]") {
  CHECK(comb::arrangements(5, 2) == enumerate_arrangements(5, 2));
  CHECK(comb::arrangements(5, 2) == 20);
  CHECK(comb::arrangements(7, 0) == 1);
  CHECK(comb::arrangements(0, 0) == 1);
  CHECK(comb::arrangements(3, 5) == 0);
  for (int n = 0; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      CHECK(comb::arrangements(n, p) == enumerate_arrangements(n, p));
    }
  }
}

TEST_CASE("count_maps", "[combinatorics]") {
  // 8 applications from a 3-set to a 2-set, confirmed by enumeration: each of
  // the 3 sources independently picks one of 2 targets.
  std::int64_t brute = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) ++brute;
  CHECK(comb::count_maps(3, 2) == brute);
  CHECK(comb::count_maps(0, 9) == 1);
  CHECK(comb::count_maps(0, 0) == 1);
  CHECK(comb::count_maps(2, 10) == 100);
}

TEST_CASE("combinations", "[combinatorics]") {
  CHECK(comb::combinations(4, 2) == 6);
  CHECK(comb::combinations(9, 0) == 1);
  CHECK(comb::combinations(10, 3) == enumerate_subsets(10, 3));
  CHECK(comb::combinations(10, 3) == 120);
  CHECK(comb::combinations(3, 5) == 0);
}

TEST_CASE("factorial, arrangements and combinations interlock", "[combinatorics]") {
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t p = 0; p <= n; ++p) {
      CHECK(comb::arrangements(n, p) * comb::factorial(n - p) == comb::factorial(n));
      CHECK(comb::combinations(n, p) * comb::factorial(p) == comb::arrangements(n, p));
      CHECK(comb::combinations(n, p) == comb::combinations(n, n - p));
    }
  }
}

TEST_CASE("pascal rows", "[combinatorics]") {
  CHECK(comb::pascal_row(0) == std::vector<BigInt>{1});
  CHECK(comb::pascal_row(4) == std::vector<BigInt>{1, 4, 6, 4, 1});
  CHECK(comb::pascal_row(5) == std::vector<BigInt>{1, 5, 10, 10, 5, 1});
  // The recurrence route agrees with the factorial route.
  for (std::int64_t n = 0; n <= 30; ++n) {
    const auto row = comb::pascal_row(n);
    for (std::int64_t p = 0; p <= n; ++p) {
      CHECK(row[static_cast<std::size_t>(p)] == comb::combinations(n, p));
    }
  }
}

TEST_CASE("multinomial", "[combinatorics]") {
  CHECK(comb::multinomial({7}) == 1);
  CHECK(comb::multinomial({1, 1, 1}) == 6);
  CHECK(comb::multinomial({9, 6, 5}) == 77597520);
  CHECK_THROWS_AS(comb::multinomial(std::span<const std::int64_t>{}), std::domain_error);

  CHECK(comb::multinomial({2, 1}) == enumerate_visible_orderings("aab"));
  CHECK(comb::multinomial({3, 2}) == enumerate_visible_orderings("aaabb"));
  CHECK(comb::multinomial({2, 2, 2}) == enumerate_visible_orderings("aabbcc"));
  CHECK(comb::multinomial({4, 3, 3}) == enumerate_visible_orderings("aaaabbbccc"));
}

TEST_CASE("multinomial normalization identity", "[combinatorics]") {
  // sum over n1+n2+n3=n of B(n1,n2,n3) a1^n1 a2^n2 a3^n3 = (a1+a2+a3)^n
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const double a1 = 0.2 + rng.next_unit();
    const double a2 = 0.2 + rng.next_unit();
    const double a3 = 0.2 + rng.next_unit();
    for (std::int64_t n = 1; n <= 8; ++n) {
      double sum = 0.0;
      for (std::int64_t n1 = 0; n1 <= n; ++n1) {
        for (std::int64_t n2 = 0; n1 + n2 <= n; ++n2) {
          const std::int64_t n3 = n - n1 - n2;
          sum += comb::multinomial({n1, n2, n3}).convert_to<double>() *
                 std::pow(a1, double(n1)) * std::pow(a2, double(n2)) *
                 std::pow(a3, double(n3));
        }
      }
      const double direct = std::pow(a1 + a2 + a3, double(n));
      CHECK(std::fabs(sum - direct) <= 1e-9 * direct);
    }
  }
}

TEST_CASE("binomial theorem evaluation", "[combinatorics]") {
  CHECK(comb::binomial_theorem_eval(1.0, 1.0, 3) == 8.0);
  CHECK(close(comb::binomial_theorem_eval(2.5, 0.0, 4), std::pow(2.5, 4.0), 1e-12));
  CHECK(close(comb::binomial_theorem_eval(0.3, 0.7, 5), 1.0, 1e-12));
  CHECK_THROWS_AS(comb::binomial_theorem_eval(1e200, 1e200, 4), std::overflow_error);

  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.next_unit() * 4.0 - 2.0;
    const double b = rng.next_unit() * 4.0 - 2.0;
    const auto n = static_cast<std::int64_t>(rng.next_u64() % 26);
    const double direct = std::pow(a + b, double(n));
    CHECK(std::fabs(comb::binomial_theorem_eval(a, b, n) - direct) <=
          1e-9 * std::max(1.0, std::fabs(direct)));
  }
}

TEST_CASE("stirling approximation", "[combinatorics]") {
  CHECK(close(comb::stirling_approx(1).value, 0.9221370, 1e-6));

  const auto s10 = comb::stirling_approx(10);
  const double exact10 = std::log(3628800.0);
  // theta_10 is a shade under 1/120; comparing against exact 10! yields
  // 0.0083306, within the 1.01/120 bound.
  CHECK(close(std::fabs(exact10 - s10.log_value), 0.0083306, 1e-6));
  CHECK(std::fabs(exact10 - s10.log_value) <= 1.01 / 120.0);
  CHECK(close(s10.value, 3598695.62, 0.5));

  const double exact50 = log_of(comb::factorial(50));
  CHECK(std::fabs(exact50 - comb::stirling_approx(50).log_value) <= 1.01 / 600.0);

  // n! / approx lies in (1, exp(1.01/(12n))] throughout the working range.
  for (std::int64_t n = 10; n <= 200; ++n) {
    const auto s = comb::stirling_approx(n);
    const double log_ratio = log_of(comb::factorial(n)) - s.log_value;
    CHECK(log_ratio > 0.0);
    CHECK(log_ratio <= s.theta_bound);
  }
}

TEST_CASE("wallis terms approach pi", "[combinatorics]") {
  CHECK(comb::wallis_term(1) == 4.0);
  CHECK(close(comb::wallis_term(2), 4096.0 / 1152.0, 1e-12));
  CHECK(close(comb::wallis_term(1000), std::numbers::pi, 1e-3));

  for (std::int64_t n : {1, 4, 16, 64}) {
    CHECK(std::fabs(comb::wallis_term(4 * n) - std::numbers::pi) <
          std::fabs(comb::wallis_term(n) - std::numbers::pi));
  }
  double previous = std::fabs(comb::wallis_term(16) - std::numbers::pi);
  for (std::int64_t n = 17; n <= 64; ++n) {
    const double err = std::fabs(comb::wallis_term(n) - std::numbers::pi);
    CHECK(err <= previous + 1e-12);
    previous = err;
  }
}

TEST_CASE("log factorial", "[combinatorics]") {
  CHECK(comb::log_factorial(0) == 0.0);
  CHECK(close(comb::log_factorial(10), std::log(3628800.0), 1e-10));

  // Brute-force oracle: extended-precision sum of ln k.
  const auto brute = [](std::int64_t n) {
    long double acc = 0.0L;
    for (std::int64_t k = 2; k <= n; ++k) acc += std::log(static_cast<long double>(k));
    return static_cast<double>(acc);
  };
  CHECK(close(comb::log_factorial(1000), brute(1000), 1e-10));
  for (std::int64_t n = 250; n <= 262; ++n) {  // spans the series crossover
    CHECK(close(comb::log_factorial(n), brute(n), 1e-10));
  }
  CHECK(close(comb::log_factorial(100000), brute(100000), 1e-8));
}
