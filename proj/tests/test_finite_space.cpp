// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "probkit/combinatorics.hpp"
#include "probkit/distributions.hpp"
#include "probkit/finite_space.hpp"
#include "probkit/rng.hpp"
#include "test_helpers.hpp"

using namespace probkit;
namespace fsp = probkit::finite_space;

namespace {

fsp::Event random_event(Rng& rng, std::size_t space_size) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < space_size; ++i) {
    if (rng.next_u64() % 2 == 0) indices.push_back(i);
  }
  return fsp::make_event(std::move(indices));
}

// Three-children space in birth order: GGG GGB GBG GBB BGG BGB BBG BBB.
const std::vector<std::string> kChildren{"GGG", "GGB", "GBG", "GBB",
                                         "BGG", "BGB", "BBG", "BBB"};

fsp::Event children_event(bool (*pred)(const std::string&)) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < kChildren.size(); ++i) {
    if (pred(kChildren[i])) indices.push_back(i);
  }
  return fsp::make_event(std::move(indices));
}

// Label-level oracle: literally enumerates ordered draws of distinguishable
// balls (0..marked-1 are the marked ones) and tallies marked counts.
std::vector<BigInt> enumerate_urn_counts(int total, int marked, int draws,
                                         bool with_replacement) {
  std::vector<BigInt> counts(draws + 1, BigInt(0));
  std::vector<bool> used(total, false);
  const auto walk = [&](auto&& self, int depth, int seen) -> void {
    if (depth == draws) {
      counts[seen] += 1;
      return;
    }
    for (int ball = 0; ball < total; ++ball) {
      if (!with_replacement && used[ball]) continue;
      used[ball] = true;
      self(self, depth + 1, seen + (ball < marked ? 1 : 0));
      used[ball] = false;
    }
  };
  walk(walk, 0, 0);
  return counts;
}

}  // namespace

TEST_CASE("uniform spaces", "[finite_space]") {
  const auto die = fsp::uniform_space(6);
  for (const Rational& w : die.weights) CHECK(w == Rational(1, 6));
  const auto two_dice = fsp::uniform_space(36);
  CHECK(two_dice.weights[0] == Rational(1, 36));
  const auto point = fsp::uniform_space(1);
  CHECK(point.weights[0] == 1);
  CHECK_THROWS_AS(fsp::uniform_space(0), std::domain_error);
}

TEST_CASE("three children example", "[finite_space]") {
  const auto space = fsp::uniform_space(8);
  const auto at_least_one_boy =
      children_event([](const std::string& w) { return w.find('B') != std::string::npos; });
  CHECK(fsp::prob(space, at_least_one_boy) == Rational(7, 8));

  // "No girl older than a boy": all boys precede all girls.
  const auto boys_first = children_event([](const std::string& w) {
    return std::is_sorted(w.begin(), w.end(),
                          [](char a, char b) { return a == 'B' && b == 'G'; });
  });
  CHECK(fsp::prob(space, boys_first) == Rational(1, 2));

  const auto one_girl = children_event(
      [](const std::string& w) { return std::count(w.begin(), w.end(), 'G') == 1; });
  CHECK(fsp::prob(space, one_girl) == Rational(3, 8));
}

TEST_CASE("probability measure laws", "[finite_space]") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = 2 + rng.next_u64() % 7;
    const fsp::FiniteProbabilitySpace space{
        fsp::uniform_space(size).outcomes, testing::random_prob_vector(rng, size)};
    const fsp::Event a = random_event(rng, size);
    const fsp::Event b = random_event(rng, size);

    // Additivity on disjoint pieces: P(A u (B \ A)) = P(A) + P(B \ A).
    fsp::Event b_minus_a;
    std::set_difference(b.indices.begin(), b.indices.end(), a.indices.begin(),
                        a.indices.end(), std::back_inserter(b_minus_a.indices));
    fsp::Event a_union_b;
    std::set_union(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                   std::back_inserter(a_union_b.indices));
    CHECK(fsp::prob(space, a_union_b) ==
          fsp::prob(space, a) + fsp::prob(space, b_minus_a));

    // Monotonicity and difference over A subset of (A u B).
    CHECK(fsp::prob(space, a) <= fsp::prob(space, a_union_b));
    CHECK(fsp::prob(space, a_union_b) - fsp::prob(space, a) ==
          fsp::prob(space, b_minus_a));

    // Conditional measure is supported by the conditioning event.
    if (fsp::prob(space, a) > 0) {
      CHECK(fsp::conditional_prob(space, a, a) == 1);
    }
  }
  const auto space = fsp::uniform_space(4);
  CHECK_THROWS_AS(fsp::prob(space, fsp::make_event({7})), std::out_of_range);
}

TEST_CASE("conditional probability on dice triples", "[finite_space]") {
  const auto space = fsp::uniform_space(216);
  fsp::Event sum_is_six, first_is_one, all;
  for (std::size_t i = 0; i < 216; ++i) {
    const std::size_t d1 = i / 36 + 1, d2 = i / 6 % 6 + 1, d3 = i % 6 + 1;
    if (d1 + d2 + d3 == 6) sum_is_six.indices.push_back(i);
    if (d1 == 1) first_is_one.indices.push_back(i);
    all.indices.push_back(i);
  }
  CHECK(fsp::prob(space, sum_is_six) == Rational(10, 216));
  CHECK(fsp::conditional_prob(space, first_is_one, sum_is_six) == Rational(2, 5));
  CHECK(fsp::conditional_prob(space, first_is_one, all) ==
        fsp::prob(space, first_is_one));
  CHECK(fsp::conditional_prob(space, first_is_one, fsp::Event{}) == 0);
}

TEST_CASE("chain rule equals intersection probability", "[finite_space]") {
  const auto space = fsp::uniform_space(12);
  fsp::Event omega;
  for (std::size_t i = 0; i < 12; ++i) omega.indices.push_back(i);
  CHECK(fsp::chain_rule(space, {omega, omega}) == 1);
  CHECK_THROWS_AS(fsp::chain_rule(space, {}), std::invalid_argument);

  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t size = 2 + rng.next_u64() % 8;
    const fsp::FiniteProbabilitySpace random_space{
        fsp::uniform_space(size).outcomes, testing::random_prob_vector(rng, size)};
    const std::vector<fsp::Event> events{random_event(rng, size), random_event(rng, size),
                                         random_event(rng, size)};
    CHECK(fsp::chain_rule(random_space, {events[0]}) == fsp::prob(random_space, events[0]));
    const fsp::Event inter =
        fsp::intersect(fsp::intersect(events[0], events[1]), events[2]);
    CHECK(fsp::chain_rule(random_space, events) == fsp::prob(random_space, inter));
  }
}

TEST_CASE("total probability formula", "[finite_space]") {
  CHECK(fsp::total_probability({{Rational(1, 2), Rational(1, 2)},
                                {Rational(1, 5), Rational(2, 5)}}) == Rational(3, 10));
  CHECK(fsp::total_probability({{Rational(1, 4), Rational(3, 4)},
                                {Rational(2, 7), Rational(2, 7)}}) == Rational(2, 7));
  CHECK(fsp::total_probability({{Rational(1), Rational(0)},
                                {Rational(3, 8), Rational(1, 2)}}) == Rational(3, 8));
  CHECK_THROWS_AS(fsp::total_probability({{Rational(1, 2), Rational(1, 3)},
                                          {Rational(1, 2), Rational(1, 2)}}),
                  std::domain_error);

  // Cross-check on explicit spaces: pick a random space, partition it into
  // consecutive cause blocks, and rebuild P(B) from the causes.
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = 4 + rng.next_u64() % 6;
    const fsp::FiniteProbabilitySpace space{fsp::uniform_space(size).outcomes,
                                            testing::random_prob_vector(rng, size)};
    const std::size_t cut = 1 + rng.next_u64() % (size - 1);
    fsp::Event cause1, cause2;
    for (std::size_t i = 0; i < size; ++i) {
      (i < cut ? cause1 : cause2).indices.push_back(i);
    }
    const fsp::Event b = random_event(rng, size);
    const Rational p1 = fsp::prob(space, cause1);
    if (p1 == 0 || p1 == 1) continue;
    const fsp::CausePartition partition{
        {p1, 1 - p1},
        {fsp::conditional_prob(space, b, cause1), fsp::conditional_prob(space, b, cause2)}};
    CHECK(fsp::total_probability(partition) == fsp::prob(space, b));
  }
}

TEST_CASE("bayes posterior", "[finite_space]") {
  const fsp::CausePartition symmetric{{Rational(1, 3), Rational(1, 3), Rational(1, 3)},
                                      {Rational(2, 5), Rational(2, 5), Rational(2, 5)}};
  for (const Rational& post : fsp::bayes_posterior(symmetric)) {
    CHECK(post == Rational(1, 3));
  }

  // Umbrella on one of seven floors with total probability p; conditioning on
  // "not found on floors 1..6" leaves P(seventh floor) = p/(7-6p).
  const auto umbrella = [](const Rational& p) {
    fsp::CausePartition partition;
    for (int floor = 0; floor < 7; ++floor) {
      partition.priors.push_back(p / 7);
      partition.likelihoods.push_back(floor == 6 ? 1 : 0);
    }
    if (p != 1) {
      partition.priors.push_back(1 - p);
      partition.likelihoods.push_back(1);
    }
    return fsp::bayes_posterior(partition)[6];
  };
  const Rational p(7, 10);
  CHECK(umbrella(p) == p / (7 - 6 * p));
  CHECK(umbrella(p) == Rational(1, 4));
  CHECK(umbrella(Rational(1)) == 1);

  // Disease test: P(D)=3/10, P(PR/D)=9/10, P(NR/Dc)=8/10 gives P(D/PR)=27/41.
  const fsp::CausePartition disease{{Rational(3, 10), Rational(7, 10)},
                                    {Rational(9, 10), Rational(2, 10)}};
  const auto posterior = fsp::bayes_posterior(disease);
  CHECK(posterior[0] == Rational(27, 41));

  CHECK_THROWS_AS(fsp::bayes_posterior({{Rational(1, 2), Rational(1, 2)},
                                        {Rational(0), Rational(0)}}),
                  std::domain_error);
  CHECK_THROWS_AS(fsp::bayes_posterior({{Rational(1), Rational(0)},
                                        {Rational(1, 2), Rational(1, 2)}}),
                  std::domain_error);

  Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t causes = 2 + rng.next_u64() % 4;
    fsp::CausePartition partition{testing::random_prob_vector(rng, causes), {}};
    for (std::size_t i = 0; i < causes; ++i) {
      partition.likelihoods.push_back(testing::random_unit_rational(rng));
    }
    const auto post = fsp::bayes_posterior(partition);
    Rational total = 0;
    for (const Rational& value : post) {
      CHECK(value >= 0);
      CHECK(value <= 1);
      total += value;
    }
    CHECK(total == 1);
  }

  // Equiprobable causes: posterior ratio equals likelihood ratio exactly.
  for (int trial = 0; trial < 100; ++trial) {
    const Rational l1 = testing::random_unit_rational(rng);
    const Rational l2 = testing::random_unit_rational(rng);
    const auto post = fsp::bayes_posterior(
        {{Rational(1, 2), Rational(1, 2)}, {l1, l2}});
    CHECK(post[0] * l2 == post[1] * l1);
  }
}

TEST_CASE("independence report fixtures", "[finite_space]") {
  // Bernstein cards 112 121 211 222; A_i = "1 in place i".
  const auto cards = fsp::uniform_space(4);
  const std::vector<fsp::Event> bernstein{fsp::make_event({0, 1}), fsp::make_event({0, 2}),
                                          fsp::make_event({1, 2})};
  const fsp::Event triple =
      fsp::intersect(fsp::intersect(bernstein[0], bernstein[1]), bernstein[2]);
  CHECK(fsp::prob(cards, triple) == 0);
  const auto cards_report = fsp::independence_report(cards, bernstein);
  CHECK(cards_report.pairwise);
  CHECK_FALSE(cards_report.global);
  CHECK_FALSE(cards_report.mutual);

  // Two dice: global factorization without pairwise independence.
  const auto dice = fsp::uniform_space(36);
  fsp::Event a, b, c;
  for (std::size_t i = 0; i < 36; ++i) {
    const std::size_t first = i / 6 + 1, second = i % 6 + 1;
    if (first <= 3) a.indices.push_back(i);
    if (second >= 4) b.indices.push_back(i);
    if (first + second == 9) c.indices.push_back(i);
  }
  CHECK(fsp::prob(dice, fsp::intersect(b, c)) == Rational(1, 12));
  CHECK(fsp::prob(dice, b) * fsp::prob(dice, c) == Rational(1, 18));
  const auto dice_report = fsp::independence_report(dice, {a, b, c});
  CHECK(dice_report.global);
  CHECK_FALSE(dice_report.pairwise);
  CHECK_FALSE(dice_report.mutual);

  // Product space: coordinates of a pair of fair coins, all three notions.
  const auto coins = fsp::uniform_space(4);  // HH HT TH TT
  const auto coins_report = fsp::independence_report(
      coins, {fsp::make_event({0, 1}), fsp::make_event({0, 2})});
  CHECK(coins_report.pairwise);
  CHECK(coins_report.mutual);
  CHECK(coins_report.global);

  CHECK_THROWS_AS(fsp::independence_report(coins, {fsp::make_event({0})}),
                  std::invalid_argument);
}

TEST_CASE("urn draw space", "[finite_space]") {
  const auto urn = fsp::urn_draw_space(10, 4, 3, false);
  CHECK(urn.weights[1] == Rational(1, 2));
  namespace comb = probkit::combinatorics;
  CHECK(urn.weights[1] == Rational(comb::combinations(4, 1) * comb::combinations(6, 2),
                                   comb::combinations(10, 3)));

  for (bool replacement : {false, true}) {
    const auto all_marked = fsp::urn_draw_space(5, 5, 4, replacement);
    CHECK(all_marked.weights[4] == 1);
  }

  // With replacement the count is Binomial(r, M/N); the oracle keeps theta
  // rational (a double M/N would not compare exactly).
  for (std::int64_t total = 1; total <= 8; ++total) {
    for (std::int64_t marked = 1; marked < total; ++marked) {
      for (std::int64_t draws = 1; draws <= 5; ++draws) {
        const auto with_repl = fsp::urn_draw_space(total, marked, draws, true);
        const Rational theta(marked, total);
        for (std::int64_t k = 0; k <= draws; ++k) {
          const Rational binom_mass =
              Rational(comb::combinations(draws, k)) *
              rational_pow(theta, static_cast<std::uint64_t>(k)) *
              rational_pow(1 - theta, static_cast<std::uint64_t>(draws - k));
          CHECK(with_repl.weights[static_cast<std::size_t>(k)] == binom_mass);
        }
      }
    }
  }

  CHECK_THROWS_AS(fsp::urn_draw_space(4, 5, 2, true), std::domain_error);
  CHECK_THROWS_AS(fsp::urn_draw_space(4, 2, 5, false), std::domain_error);

  // Against the ball-label enumeration, both drawing modes.
  for (int total = 1; total <= 6; ++total) {
    for (int marked = 0; marked <= total; ++marked) {
      for (int draws = 1; draws <= std::min(total, 4); ++draws) {
        for (bool replacement : {false, true}) {
          const auto counts = enumerate_urn_counts(total, marked, draws, replacement);
          BigInt all = 0;
          for (const BigInt& n : counts) all += n;
          const auto space = fsp::urn_draw_space(total, marked, draws, replacement);
          for (int k = 0; k <= draws; ++k) {
            CHECK(space.weights[static_cast<std::size_t>(k)] ==
                  Rational(counts[static_cast<std::size_t>(k)], all));
          }
        }
      }
    }
  }
}

TEST_CASE("space json round trip", "[finite_space]") {
  const auto urn = fsp::urn_draw_space(10, 4, 3, false);
  const auto restored = fsp::space_from_json(fsp::space_to_json(urn));
  CHECK(restored.outcomes == urn.outcomes);
  CHECK(restored.weights == urn.weights);

  // Terminating decimal weights convert exactly.
  const auto decimal = fsp::space_from_json(
      nlohmann::json::parse(R"({"outcomes":["a","b"],"weights":["0.25","0.75"]})"));
  CHECK(decimal.weights[0] == Rational(1, 4));
  CHECK(decimal.weights[1] == Rational(3, 4));

  CHECK_THROWS(fsp::space_from_json(
      nlohmann::json::parse(R"({"outcomes":["a","b"],"weights":["0.5","0.4"]})")));
}
