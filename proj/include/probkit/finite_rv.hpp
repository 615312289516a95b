// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "probkit/exact.hpp"

namespace probkit {

/// Finite real-valued random variable: distinct values x_i carrying exact
/// rational probabilities that sum to one.
struct FiniteRv {
  std::vector<double> values;
  std::vector<Rational> probs;
};

/// Mean / variance / standard deviation / E[X(X-1)] of a law or finite rv.
struct MomentSummary {
  double mean;
  double variance;
  double stddev;
  double factorial_moment2;
};

inline FiniteRv make_finite_rv(std::vector<double> values, std::vector<Rational> probs) {
  if (values.empty() || values.size() != probs.size()) {
    throw std::invalid_argument("finite rv: values and probs must be nonempty and equal-sized");
  }
  Rational total = 0;
  for (const Rational& p : probs) {
    if (p < 0) throw std::domain_error("finite rv: negative probability");
    total += p;
  }
  if (total != 1) {
    throw std::domain_error("finite rv: probabilities must sum to 1 exactly");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) {
        throw std::invalid_argument("finite rv: values must be pairwise distinct");
      }
    }
  }
  return FiniteRv{std::move(values), std::move(probs)};
}

/// JSON form: {"values":[...], "probs":["num/den" | decimal string | number]}.
inline nlohmann::json finite_rv_to_json(const FiniteRv& rv) {
  nlohmann::json j;
  j["values"] = rv.values;
  auto& probs = j["probs"] = nlohmann::json::array();
  for (const Rational& p : rv.probs) probs.push_back(format_rational(p));
  return j;
}

inline FiniteRv finite_rv_from_json(const nlohmann::json& j) {
  if (!j.contains("values") || !j.contains("probs")) {
    throw std::invalid_argument("finite rv json: needs \"values\" and \"probs\"");
  }
  std::vector<double> values = j.at("values").get<std::vector<double>>();
  std::vector<Rational> probs;
  for (const auto& entry : j.at("probs")) {
    if (entry.is_string()) {
      probs.push_back(parse_rational(entry.get<std::string>()));
    } else {
      probs.push_back(exact_from_double(entry.get<double>()));
    }
  }
  return make_finite_rv(std::move(values), std::move(probs));
}

}  // namespace probkit
