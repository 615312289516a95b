// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "probkit/distributions.hpp"
#include "probkit/exact.hpp"
#include "probkit/finite_rv.hpp"

namespace probkit::couples {

/// Joint law of a discrete pair on the extended grid V_X x V_Y: explicit
/// zeros are kept, values strictly increasing, entries exact rationals
/// summing to one.
struct JointLaw {
  std::vector<double> x_values;
  std::vector<double> y_values;
  std::vector<std::vector<Rational>> p;  ///< p[i][j] = P(X = x_i, Y = y_j)
};

/// Conditional law of X given Y = y_j (column j).
struct ConditionalLaw {
  std::size_t given_y_index;
  std::vector<Rational> probs;
};

inline JointLaw make_joint(std::vector<double> x_values, std::vector<double> y_values,
                           std::vector<std::vector<Rational>> p) {
  if (x_values.empty() || y_values.empty() || p.size() != x_values.size()) {
    throw std::invalid_argument("joint law: grid and matrix sizes must agree");
  }
  if (!std::is_sorted(x_values.begin(), x_values.end(), std::less_equal<>())) {
    throw std::invalid_argument("joint law: x values must be strictly increasing");
  }
  if (!std::is_sorted(y_values.begin(), y_values.end(), std::less_equal<>())) {
    throw std::invalid_argument("joint law: y values must be strictly increasing");
  }
  Rational total = 0;
  for (const auto& row : p) {
    if (row.size() != y_values.size()) {
      throw std::invalid_argument("joint law: ragged probability matrix");
    }
    for (const Rational& cell : row) {
      if (cell < 0) throw std::domain_error("joint law: negative cell probability");
      total += cell;
    }
  }
  if (total != 1) {
    throw std::domain_error("joint law: cell probabilities must sum to 1 exactly");
  }
  return {std::move(x_values), std::move(y_values), std::move(p)};
}

/// Joint with cells p_i q_j; the independent pairing of the two marginals.
inline JointLaw product_joint(const FiniteRv& x, const FiniteRv& y) {
  std::vector<std::size_t> xi(x.values.size()), yi(y.values.size());
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = i;
  for (std::size_t j = 0; j < yi.size(); ++j) yi[j] = j;
  std::sort(xi.begin(), xi.end(),
            [&](std::size_t a, std::size_t b) { return x.values[a] < x.values[b]; });
  std::sort(yi.begin(), yi.end(),
            [&](std::size_t a, std::size_t b) { return y.values[a] < y.values[b]; });
  std::vector<double> xs, ys;
  for (std::size_t i : xi) xs.push_back(x.values[i]);
  for (std::size_t j : yi) ys.push_back(y.values[j]);
  std::vector<std::vector<Rational>> p(xs.size(), std::vector<Rational>(ys.size()));
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = 0; b < ys.size(); ++b) {
      p[a][b] = x.probs[xi[a]] * y.probs[yi[b]];
    }
  }
  return make_joint(std::move(xs), std::move(ys), std::move(p));
}

/// Row sums: the law of X.
inline FiniteRv marginal_x(const JointLaw& joint) {
  std::vector<Rational> probs(joint.x_values.size(), Rational(0));
  for (std::size_t i = 0; i < probs.size(); ++i) {
    for (const Rational& cell : joint.p[i]) probs[i] += cell;
  }
  return FiniteRv{joint.x_values, std::move(probs)};
}

/// Column sums: the law of Y.
inline FiniteRv marginal_y(const JointLaw& joint) {
  std::vector<Rational> probs(joint.y_values.size(), Rational(0));
  for (const auto& row : joint.p) {
    for (std::size_t j = 0; j < probs.size(); ++j) probs[j] += row[j];
  }
  return FiniteRv{joint.y_values, std::move(probs)};
}

namespace detail {
inline Rational column_marginal(const JointLaw& joint, std::size_t j) {
  Rational sum = 0;
  for (const auto& row : joint.p) sum += row.at(j);
  return sum;
}
}  // namespace detail

/// p_i^(j) = p_{i,j} / p_{.,j}; errors when column j carries no mass.
inline ConditionalLaw conditional_law(const JointLaw& joint, std::size_t given_y_index) {
  const Rational col = detail::column_marginal(joint, given_y_index);
  if (col == 0) {
    throw std::domain_error("conditional law: conditioning column has zero marginal");
  }
  std::vector<Rational> probs(joint.x_values.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = joint.p[i][given_y_index] / col;
  }
  return {given_y_index, std::move(probs)};
}

/// E(h(X) / Y = y_j) as an exact rational (h evaluated at the grid points,
/// its double results taken exactly).
inline Rational conditional_expectation_exact(const JointLaw& joint,
                                              const std::function<double(double)>& h,
                                              std::size_t given_y_index) {
  const ConditionalLaw cond = conditional_law(joint, given_y_index);
  Rational sum = 0;
  for (std::size_t i = 0; i < cond.probs.size(); ++i) {
    sum += exact_from_double(h(joint.x_values[i])) * cond.probs[i];
  }
  return sum;
}

inline double conditional_expectation(const JointLaw& joint,
                                      const std::function<double(double)>& h,
                                      std::size_t given_y_index) {
  return to_double(conditional_expectation_exact(joint, h, given_y_index));
}

/// sum_j P(Y=y_j) E(h(X)/Y=y_j), skipping zero-marginal columns; equals
/// E(h(X)) exactly.
inline Rational tower_expectation_exact(const JointLaw& joint,
                                        const std::function<double(double)>& h) {
  Rational sum = 0;
  for (std::size_t j = 0; j < joint.y_values.size(); ++j) {
    const Rational col = detail::column_marginal(joint, j);
    if (col == 0) continue;
    sum += col * conditional_expectation_exact(joint, h, j);
  }
  return sum;
}

inline double tower_expectation(const JointLaw& joint,
                                const std::function<double(double)>& h) {
  return to_double(tower_expectation_exact(joint, h));
}

/// Exact cell-by-cell factorization test p_{ij} = p_{i,.} p_{.,j}.
inline bool is_independent(const JointLaw& joint) {
  const FiniteRv mx = marginal_x(joint);
  const FiniteRv my = marginal_y(joint);
  for (std::size_t i = 0; i < joint.x_values.size(); ++i) {
    for (std::size_t j = 0; j < joint.y_values.size(); ++j) {
      if (joint.p[i][j] != mx.probs[i] * my.probs[j]) return false;
    }
  }
  return true;
}

/// Phi_{X,Y}(s,t) = sum p_{ij} e^{s x_i + t y_j}.
inline double joint_mgf(const JointLaw& joint, double s, double t) {
  double sum = 0.0;
  for (std::size_t i = 0; i < joint.x_values.size(); ++i) {
    for (std::size_t j = 0; j < joint.y_values.size(); ++j) {
      sum += to_double(joint.p[i][j]) *
             std::exp(s * joint.x_values[i] + t * joint.y_values[j]);
    }
  }
  if (!std::isfinite(sum)) {
    throw std::overflow_error("joint_mgf: value exceeds double range");
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Convolution
// ---------------------------------------------------------------------------

namespace detail {
inline std::int64_t integer_value(double x, const char* who) {
  if (!(std::floor(x) == x)) {
    throw std::domain_error(std::string(who) + ": support must be integer-valued");
  }
  return static_cast<std::int64_t>(x);
}
}  // namespace detail

/// Law of the sum of two independent integer-supported finite rvs:
/// c_k = sum_i a_i b_{k-i}, exact.
inline FiniteRv convolve(const FiniteRv& a, const FiniteRv& b) {
  std::map<std::int64_t, Rational> acc;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const std::int64_t va = detail::integer_value(a.values[i], "convolve");
    for (std::size_t j = 0; j < b.values.size(); ++j) {
      const std::int64_t vb = detail::integer_value(b.values[j], "convolve");
      acc[va + vb] += a.probs[i] * b.probs[j];
    }
  }
  FiniteRv out;
  for (const auto& [value, mass] : acc) {
    out.values.push_back(static_cast<double>(value));
    out.probs.push_back(mass);
  }
  return out;
}

/// Exact convolution of two bounded-support discrete laws.
inline FiniteRv to_finite_rv(const distributions::Law& law) {
  using distributions::SupportDescriptor;
  const SupportDescriptor sup = distributions::support(law);
  if (sup.kind == SupportDescriptor::Kind::point) {
    return FiniteRv{{sup.lo}, {Rational(1)}};
  }
  if (sup.kind != SupportDescriptor::Kind::finite_integer_range) {
    throw std::domain_error("to_finite_rv: law has unbounded support");
  }
  FiniteRv out;
  for (std::int64_t k = static_cast<std::int64_t>(sup.lo);
       k <= static_cast<std::int64_t>(sup.hi); ++k) {
    out.values.push_back(static_cast<double>(k));
    out.probs.push_back(distributions::mass_exact(law, k));
  }
  return out;
}

inline FiniteRv convolve(const distributions::Law& a, const distributions::Law& b) {
  return convolve(to_finite_rv(a), to_finite_rv(b));
}

/// Lazily evaluated mass of the sum of two independent discrete laws with
/// integer supports bounded below; the summation index is restricted to the
/// feasible window.
inline std::function<double(std::int64_t)> convolve_mass(const distributions::Law& a,
                                                         const distributions::Law& b) {
  if (!a.is_discrete() || !b.is_discrete()) {
    throw std::domain_error("convolve_mass: laws must be discrete");
  }
  const std::int64_t lo_a = static_cast<std::int64_t>(distributions::support(a).lo);
  const std::int64_t lo_b = static_cast<std::int64_t>(distributions::support(b).lo);
  return [a, b, lo_a, lo_b](std::int64_t k) {
    double sum = 0.0;
    for (std::int64_t i = lo_a; i <= k - lo_b; ++i) {
      sum += distributions::mass(a, i) * distributions::mass(b, k - i);
    }
    return sum;
  };
}

/// c_n = sum_k a_k b_{n-k} for finite (or truncated) sequences; the
/// generating-function identity c(s) = a(s) b(s) holds on (0,1].
inline std::vector<double> convolve_sequences(const std::vector<double>& a,
                                              const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// CSV joint-table format
// ---------------------------------------------------------------------------

struct ParsedJoint {
  JointLaw joint;
  bool renormalized;  ///< decimal table summed within 1e-9 of 1 and was rescaled
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  return cells;
}

}  // namespace detail

/// Parses the joint-table format: header "X\Y, y_1, ..., y_m", then one row
/// per x value holding m probabilities (decimal or "num/den"). Rational
/// tables must sum to 1 exactly; decimal tables within 1e-9 (then
/// renormalized, flagged).
inline ParsedJoint parse_joint_csv(std::istream& in) {
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    rows.push_back(detail::split_csv_row(line));
  }
  if (rows.size() < 2) {
    throw std::invalid_argument("joint csv: need a header row and at least one x row");
  }
  const std::size_t columns = rows.front().size();
  if (columns < 2) {
    throw std::invalid_argument("joint csv: header must list at least one y value");
  }
  std::vector<double> y_values;
  for (std::size_t j = 1; j < columns; ++j) {
    try {
      y_values.push_back(std::stod(rows.front()[j]));
    } catch (const std::exception&) {
      throw std::invalid_argument("joint csv: bad y value in header column " +
                                  std::to_string(j + 1));
    }
  }
  std::vector<double> x_values;
  std::vector<std::vector<Rational>> cells;
  bool any_decimal = false;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != columns) {
      throw std::invalid_argument("joint csv: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " cells, expected " +
                                  std::to_string(columns));
    }
    try {
      x_values.push_back(std::stod(rows[r][0]));
    } catch (const std::exception&) {
      throw std::invalid_argument("joint csv: bad x value at row " + std::to_string(r + 1));
    }
    std::vector<Rational> row;
    for (std::size_t j = 1; j < columns; ++j) {
      const std::string& cell = rows[r][j];
      if (cell.find('/') == std::string::npos) any_decimal = true;
      try {
        row.push_back(parse_rational(cell));
      } catch (const std::exception&) {
        throw std::invalid_argument("joint csv: bad probability at row " +
                                    std::to_string(r + 1) + ", column " +
                                    std::to_string(j + 1));
      }
      if (row.back() < 0) {
        throw std::invalid_argument("joint csv: negative probability at row " +
                                    std::to_string(r + 1) + ", column " +
                                    std::to_string(j + 1));
      }
    }
    cells.push_back(std::move(row));
  }
  Rational total = 0;
  for (const auto& row : cells) {
    for (const Rational& cell : row) total += cell;
  }
  bool renormalized = false;
  if (total != 1) {
    if (!any_decimal || std::fabs(to_double(total - 1)) > 1e-9) {
      throw std::domain_error("joint csv: table sums to " + format_rational(total) +
                              ", not 1");
    }
    for (auto& row : cells) {
      for (Rational& cell : row) cell /= total;
    }
    renormalized = true;
  }
  return {make_joint(std::move(x_values), std::move(y_values), std::move(cells)),
          renormalized};
}

inline std::string format_joint_csv(const JointLaw& joint) {
  std::ostringstream out;
  out << "X\\Y";
  for (double y : joint.y_values) out << "," << y;
  out << "\n";
  for (std::size_t i = 0; i < joint.x_values.size(); ++i) {
    out << joint.x_values[i];
    for (const Rational& cell : joint.p[i]) out << "," << format_rational(cell);
    out << "\n";
  }
  return out.str();
}

}  // namespace probkit::couples
