// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include <json.hpp>

#include "probkit/exact.hpp"

namespace probkit::finite_space {

/// Labeled outcomes with exact rational weights summing to one.
struct FiniteProbabilitySpace {
  std::vector<std::string> outcomes;
  std::vector<Rational> weights;
};

/// An event is a set of outcome indices (sorted, duplicate-free).
struct Event {
  std::vector<std::size_t> indices;
};

/// Disjoint causes E_i with prior probabilities and effect likelihoods P(B/E_i).
struct CausePartition {
  std::vector<Rational> priors;
  std::vector<Rational> likelihoods;
};

struct IndependenceReport {
  bool pairwise;  ///< factorization for every pair
  bool mutual;    ///< factorization for every sub-collection of size >= 2
  bool global;    ///< factorization of the full intersection only
};

inline FiniteProbabilitySpace make_space(std::vector<std::string> outcomes,
                                         std::vector<Rational> weights) {
  if (outcomes.empty() || outcomes.size() != weights.size()) {
    throw std::invalid_argument("space: outcomes and weights must be nonempty and equal-sized");
  }
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw std::domain_error("space: negative weight");
    total += w;
  }
  if (total != 1) {
    throw std::domain_error("space: weights must sum to 1 exactly");
  }
  std::vector<std::string> sorted = outcomes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("space: outcomes must be pairwise distinct");
  }
  return {std::move(outcomes), std::move(weights)};
}

inline Event make_event(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return {std::move(indices)};
}

inline FiniteProbabilitySpace uniform_space(std::size_t outcome_count) {
  if (outcome_count == 0) {
    throw std::domain_error("uniform_space: outcome count must be >= 1");
  }
  std::vector<std::string> outcomes(outcome_count);
  for (std::size_t i = 0; i < outcome_count; ++i) outcomes[i] = std::to_string(i);
  return {std::move(outcomes),
          std::vector<Rational>(outcome_count, Rational(1, outcome_count))};
}

inline Rational prob(const FiniteProbabilitySpace& space, const Event& a) {
  Rational sum = 0;
  for (std::size_t i : a.indices) {
    if (i >= space.weights.size()) {
      throw std::out_of_range("event index outside the space");
    }
    sum += space.weights[i];
  }
  return sum;
}

inline Event intersect(const Event& a, const Event& b) {
  Event out;
  std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(),
                        b.indices.end(), std::back_inserter(out.indices));
  return out;
}

/// P(B/A) = P(A inter B)/P(A), with the convention that conditioning on a
/// null event yields 0.
inline Rational conditional_prob(const FiniteProbabilitySpace& space, const Event& b,
                                 const Event& given_a) {
  const Rational pa = prob(space, given_a);
  if (pa == 0) return 0;
  return prob(space, intersect(given_a, b)) / pa;
}

/// P(A_1) P(A_2/A_1) ... P(A_n/A_1 inter ... inter A_{n-1}); equals the
/// probability of the full intersection exactly.
inline Rational chain_rule(const FiniteProbabilitySpace& space,
                           const std::vector<Event>& events) {
  if (events.empty()) {
    throw std::invalid_argument("chain_rule: needs at least one event");
  }
  Rational product = prob(space, events.front());
  Event prefix = events.front();
  for (std::size_t k = 1; k < events.size(); ++k) {
    product *= conditional_prob(space, events[k], prefix);
    prefix = intersect(prefix, events[k]);
  }
  return product;
}

inline void validate(const CausePartition& partition) {
  if (partition.priors.empty() || partition.priors.size() != partition.likelihoods.size()) {
    throw std::invalid_argument("cause partition: priors and likelihoods must match");
  }
  Rational total = 0;
  for (const Rational& p : partition.priors) {
    if (p < 0) throw std::domain_error("cause partition: negative prior");
    total += p;
  }
  if (total != 1) {
    throw std::domain_error("cause partition: priors must sum to 1");
  }
  for (const Rational& l : partition.likelihoods) {
    if (l < 0 || l > 1) {
      throw std::domain_error("cause partition: likelihood outside [0,1]");
    }
  }
}

/// P(B) = sum_j P(B/E_j) P(E_j).
inline Rational total_probability(const CausePartition& partition) {
  validate(partition);
  Rational sum = 0;
  for (std::size_t j = 0; j < partition.priors.size(); ++j) {
    sum += partition.likelihoods[j] * partition.priors[j];
  }
  return sum;
}

/// Posteriors P(E_i/B) = P(E_i) P(B/E_i) / sum_j P(E_j) P(B/E_j).
inline std::vector<Rational> bayes_posterior(const CausePartition& partition) {
  validate(partition);
  for (const Rational& p : partition.priors) {
    if (p <= 0) throw std::domain_error("bayes: prior probabilities must be positive");
  }
  const Rational evidence = total_probability(partition);
  if (evidence == 0) {
    throw std::domain_error("bayes: total probability of the effect is zero");
  }
  std::vector<Rational> posterior(partition.priors.size());
  for (std::size_t i = 0; i < posterior.size(); ++i) {
    posterior[i] = partition.priors[i] * partition.likelihoods[i] / evidence;
  }
  return posterior;
}

/// Checks the three factorization notions on the given events. Mutual
/// independence enumerates every sub-collection of size >= 2, so it is meant
/// for small families (cost 2^events).
inline IndependenceReport independence_report(const FiniteProbabilitySpace& space,
                                              const std::vector<Event>& events) {
  const std::size_t n = events.size();
  if (n < 2) {
    throw std::invalid_argument("independence_report: needs at least two events");
  }
  if (n > 62) {
    throw std::length_error("independence_report: too many events to enumerate");
  }
  std::vector<Rational> single(n);
  for (std::size_t i = 0; i < n; ++i) single[i] = prob(space, events[i]);

  const auto factorizes = [&](std::uint64_t mask) {
    Event inter;
    Rational product = 1;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      product *= single[i];
      inter = first ? events[i] : intersect(inter, events[i]);
      first = false;
    }
    return prob(space, inter) == product;
  };

  IndependenceReport report{true, true, false};
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const int bits = std::popcount(mask);
    if (bits < 2) continue;
    const bool ok = factorizes(mask);
    if (bits == 2 && !ok) report.pairwise = false;
    if (!ok) report.mutual = false;
  }
  report.global = factorizes(full);
  return report;
}

/// Space of the number of marked balls seen in `draws` ordered draws from an
/// urn of `total` balls, `marked` of them marked. Aggregates the equiprobable
/// ordered sequences by marked count; the per-branch multiplicities are the
/// counting principle at work, so the result is an exact enumeration without
/// binomial-coefficient shortcuts.
inline FiniteProbabilitySpace urn_draw_space(std::int64_t total, std::int64_t marked,
                                             std::int64_t draws, bool with_replacement) {
  if (total < 1 || marked < 0 || marked > total || draws < 1) {
    throw std::domain_error("urn_draw_space: need 1 <= draws, 0 <= marked <= total");
  }
  if (!with_replacement && draws > total) {
    throw std::domain_error("urn_draw_space: draws must be <= total without replacement");
  }
  std::vector<BigInt> sequences(static_cast<std::size_t>(draws) + 1, BigInt(0));
  // DFS over draw positions; each branch carries the number of concrete
  // ordered sequences it stands for.
  const auto walk = [&](auto&& self, std::int64_t marked_left, std::int64_t plain_left,
                        std::int64_t depth, std::int64_t marked_seen,
                        BigInt ways) -> void {
    if (depth == draws) {
      sequences[static_cast<std::size_t>(marked_seen)] += ways;
      return;
    }
    const std::int64_t m_choices = with_replacement ? marked : marked_left;
    const std::int64_t p_choices = with_replacement ? total - marked : plain_left;
    if (m_choices > 0) {
      self(self, marked_left - 1, plain_left, depth + 1, marked_seen + 1,
           ways * m_choices);
    }
    if (p_choices > 0) {
      self(self, marked_left, plain_left - 1, depth + 1, marked_seen, ways * p_choices);
    }
  };
  walk(walk, marked, total - marked, 0, 0, BigInt(1));

  BigInt all = 0;
  for (const BigInt& s : sequences) all += s;
  std::vector<std::string> outcomes;
  std::vector<Rational> weights;
  for (std::int64_t k = 0; k <= draws; ++k) {
    outcomes.push_back(std::to_string(k));
    weights.emplace_back(sequences[static_cast<std::size_t>(k)], all);
  }
  return {std::move(outcomes), std::move(weights)};
}

/// JSON form: {"outcomes":[...], "weights":["num/den" | decimal string]}.
inline nlohmann::json space_to_json(const FiniteProbabilitySpace& space) {
  nlohmann::json j;
  j["outcomes"] = space.outcomes;
  auto& weights = j["weights"] = nlohmann::json::array();
  for (const Rational& w : space.weights) weights.push_back(format_rational(w));
  return j;
}

inline FiniteProbabilitySpace space_from_json(const nlohmann::json& j) {
  if (!j.contains("outcomes") || !j.contains("weights")) {
    throw std::invalid_argument("space json: needs \"outcomes\" and \"weights\"");
  }
  std::vector<std::string> outcomes = j.at("outcomes").get<std::vector<std::string>>();
  std::vector<Rational> weights;
  for (const auto& entry : j.at("weights")) {
    if (entry.is_string()) {
      weights.push_back(parse_rational(entry.get<std::string>()));
    } else {
      weights.push_back(exact_from_double(entry.get<double>()));
    }
  }
  return make_space(std::move(outcomes), std::move(weights));
}

}  // namespace probkit::finite_space
