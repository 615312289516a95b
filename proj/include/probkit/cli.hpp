// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "probkit/couples.hpp"
#include "probkit/distributions.hpp"
#include "probkit/finite_space.hpp"
#include "probkit/limits.hpp"
#include "probkit/moments.hpp"
#include "probkit/rng.hpp"

namespace probkit::cli {

/// Command-line misuse (unknown law, missing flag); maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct LawFlags {
  std::optional<std::int64_t> size, n, m, k;
  std::optional<double> prob, lambda, rate, shape, scale, mean, sd, min, max, value;
};

inline void add_law_flags(CLI::App* sub, LawFlags& f) {
  sub->add_option("--size", f.size, "number of trials / successes");
  sub->add_option("--n", f.n, "discrete-uniform size or unmarked balls (hyper)");
  sub->add_option("--m", f.m, "marked balls (hyper)");
  sub->add_option("--k", f.k, "number of draws (hyper)");
  sub->add_option("--prob", f.prob, "success probability");
  sub->add_option("--lambda", f.lambda, "Poisson intensity");
  sub->add_option("--rate", f.rate, "exponential/gamma rate");
  sub->add_option("--shape", f.shape, "gamma shape");
  sub->add_option("--scale", f.scale, "gamma scale (1/rate)");
  sub->add_option("--mean", f.mean, "normal mean");
  sub->add_option("--sd", f.sd, "normal standard deviation");
  sub->add_option("--min", f.min, "uniform lower bound");
  sub->add_option("--max", f.max, "uniform upper bound");
  sub->add_option("--value", f.value, "degenerate value");
}

inline distributions::Law build_law(const std::string& name, const LawFlags& f) {
  using distributions::Law;
  const auto want_d = [&](const std::optional<double>& v, const char* flag) {
    if (!v) throw UsageError("law '" + name + "' requires --" + flag);
    return *v;
  };
  const auto want_i = [&](const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw UsageError("law '" + name + "' requires --" + flag);
    return *v;
  };
  if (name == "bern") return Law::bernoulli(want_d(f.prob, "prob"));
  if (name == "dunif") return Law::discrete_uniform(want_i(f.n, "n"));
  if (name == "binom") return Law::binomial(want_i(f.size, "size"), want_d(f.prob, "prob"));
  if (name == "geom") return Law::geometric(want_d(f.prob, "prob"));
  if (name == "nfail") return Law::num_failures(want_d(f.prob, "prob"));
  if (name == "nbinom") {
    return Law::negative_binomial(want_i(f.size, "size"), want_d(f.prob, "prob"));
  }
  if (name == "hyper") {
    const std::int64_t marked = want_i(f.m, "m");
    return Law::hypergeometric(marked + want_i(f.n, "n"), marked, want_i(f.k, "k"));
  }
  if (name == "pois") return Law::poisson(want_d(f.lambda, "lambda"));
  if (name == "unif") return Law::uniform(want_d(f.min, "min"), want_d(f.max, "max"));
  if (name == "exp") return Law::exponential(want_d(f.rate, "rate"));
  if (name == "gamma") {
    const double rate = f.rate ? *f.rate : 1.0 / want_d(f.scale, "scale");
    return Law::gamma(want_d(f.shape, "shape"), rate);
  }
  if (name == "norm") {
    const double sd = want_d(f.sd, "sd");
    return Law::normal(want_d(f.mean, "mean"), sd * sd);
  }
  if (name == "degenerate") return Law::degenerate(want_d(f.value, "value"));
  throw UsageError("unknown law '" + name +
                   "' (expected bern, dunif, binom, geom, nfail, nbinom, hyper, pois, "
                   "unif, exp, gamma or norm)");
}

inline nlohmann::json load_json_argument(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') {
    return nlohmann::json::parse(spec);
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open file '" + spec + "'");
  return nlohmann::json::parse(in);
}

inline void print_rv_line(std::ostream& out, const char* label,
                          const std::vector<Rational>& probs, int digits) {
  out << label;
  for (const Rational& p : probs) out << " " << fmt(to_double(p), digits);
  out << "\n";
}

// Umbrella search: seven floor causes with prior p/7 each, plus the
// "not in the building" cause when p < 1; effect = not found on floors 1-6.
inline Rational umbrella_posterior(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("umbrella: p must lie in [0,1]");
  }
  if (p == 0.0) return 0;
  const Rational rp = exact_from_double(p);
  finite_space::CausePartition partition;
  for (int floor = 0; floor < 7; ++floor) {
    partition.priors.push_back(rp / 7);
    partition.likelihoods.push_back(floor == 6 ? 1 : 0);
  }
  if (rp != 1) {
    partition.priors.push_back(1 - rp);
    partition.likelihoods.push_back(1);
  }
  return finite_space::bayes_posterior(partition)[6];
}

}  // namespace detail

/// Executes one command line (without the program name); writes results to
/// `out`, one value per line, and diagnostics to `err`. Returns the exit
/// status: 0 success, 1 domain error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"probability toolkit"};
  app.name("probkit");
  app.fallthrough(true);
  int digits = 7;
  app.add_option("--digits", digits, "significant digits for printed values")
      ->envname("PROBKIT_DIGITS");

  detail::LawFlags flags;
  std::string law_name;
  double at = 0.0;
  std::uint64_t seed = 0;
  std::int64_t count = 0;

  CLI::App* cmd_d = app.add_subcommand("d", "mass (discrete) or density (continuous)");
  CLI::App* cmd_p = app.add_subcommand("p", "cumulative distribution function");
  CLI::App* cmd_q = app.add_subcommand("q", "quantile function");
  for (CLI::App* sub : {cmd_d, cmd_p, cmd_q}) {
    sub->add_option("law", law_name, "law name")->required();
    sub->add_option("x", at, "evaluation point")->required();
    detail::add_law_flags(sub, flags);
  }
  CLI::App* cmd_r = app.add_subcommand("r", "pseudo-random draws");
  cmd_r->add_option("law", law_name, "law name")->required();
  cmd_r->add_option("--seed", seed, "generator seed")->required();
  cmd_r->add_option("--count", count, "number of draws")->required();
  detail::add_law_flags(cmd_r, flags);

  std::string summary_spec;
  CLI::App* cmd_summary =
      app.add_subcommand("summary", "moment summary of a JSON law or finite rv");
  cmd_summary->add_option("spec", summary_spec, "inline JSON or a file path")->required();

  std::string joint_path;
  std::optional<double> given_y;
  CLI::App* cmd_joint = app.add_subcommand("joint", "analyze a CSV joint-law table");
  cmd_joint->add_option("csv", joint_path, "joint table CSV path")->required();
  cmd_joint->add_option("--given-y", given_y, "condition on this Y value");

  std::vector<double> priors, likelihoods;
  CLI::App* cmd_bayes = app.add_subcommand("bayes", "posterior of a cause partition");
  cmd_bayes->add_option("--priors", priors, "prior probabilities")
      ->delimiter(',')
      ->required();
  cmd_bayes->add_option("--likelihoods", likelihoods, "effect likelihoods")
      ->delimiter(',')
      ->required();

  CLI::App* cmd_limits = app.add_subcommand("limits", "limit-theorem convergence tables");
  cmd_limits->require_subcommand(1);
  std::vector<std::int64_t> grid;
  double lim_lambda = 1.0, lim_p = 0.5, lim_a = -1.0, lim_b = 1.0;
  std::int64_t kmax = -1;
  bool as_csv = false;
  CLI::App* lim_pois =
      cmd_limits->add_subcommand("poisson", "sup distance binomial(n, lambda/n) vs poisson");
  lim_pois->add_option("--lambda", lim_lambda, "poisson intensity")->required();
  lim_pois->add_option("--n", grid, "sample sizes")->delimiter(',')->required();
  lim_pois->add_option("--kmax", kmax, "comparison window");
  lim_pois->add_flag("--csv", as_csv, "emit CSV instead of an aligned table");
  CLI::App* lim_local = cmd_limits->add_subcommand("local", "local limit ratio error");
  CLI::App* lim_clt = cmd_limits->add_subcommand("clt", "interval probability error");
  for (CLI::App* sub : {lim_local, lim_clt}) {
    sub->add_option("--p", lim_p, "success probability")->required();
    sub->add_option("--a", lim_a, "window lower end")->required();
    sub->add_option("--b", lim_b, "window upper end")->required();
    sub->add_option("--n", grid, "sample sizes")->delimiter(',')->required();
    sub->add_flag("--csv", as_csv, "emit CSV instead of an aligned table");
  }

  CLI::App* cmd_demo = app.add_subcommand("demo", "worked examples");
  cmd_demo->require_subcommand(1);
  double umbrella_p = 0.0;
  CLI::App* demo_umbrella =
      cmd_demo->add_subcommand("umbrella", "probability the umbrella is on floor 7");
  demo_umbrella->add_option("--p", umbrella_p, "probability it is in the building")
      ->required();
  CLI::App* demo_disease =
      cmd_demo->add_subcommand("disease", "posterior of infection given a positive test");
  CLI::App* demo_lazy = cmd_demo->add_subcommand(
      "lazy-student", "probability of passing a 20-question MCQ at random");
  CLI::App* demo_bernstein =
      cmd_demo->add_subcommand("bernstein", "pairwise but not mutually independent events");

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("probkit");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (*cmd_d || *cmd_p || *cmd_q) {
      const distributions::Law law = detail::build_law(law_name, flags);
      double result = 0.0;
      if (*cmd_d) {
        if (law.is_continuous()) {
          result = distributions::density(law, at);
        } else if (std::floor(at) != at) {
          result = 0.0;
        } else {
          result = distributions::mass(law, static_cast<std::int64_t>(at));
        }
      } else if (*cmd_p) {
        result = distributions::cdf(law, at);
      } else {
        result = distributions::quantile(law, at);
      }
      out << detail::fmt(result, digits) << "\n";
    } else if (*cmd_r) {
      const distributions::Law law = detail::build_law(law_name, flags);
      if (count < 1) throw std::domain_error("r: --count must be >= 1");
      Rng rng(seed);
      for (double draw : distributions::sample(law, rng, static_cast<std::size_t>(count))) {
        out << detail::fmt(draw, digits) << "\n";
      }
    } else if (*cmd_summary) {
      const nlohmann::json spec = detail::load_json_argument(summary_spec);
      const MomentSummary s =
          spec.contains("law")
              ? distributions::summarize(distributions::law_from_json(spec))
              : moments::summarize(finite_rv_from_json(spec));
      out << "mean: " << detail::fmt(s.mean, digits) << "\n";
      out << "variance: " << detail::fmt(s.variance, digits) << "\n";
      out << "sd: " << detail::fmt(s.stddev, digits) << "\n";
      out << "fm2: " << detail::fmt(s.factorial_moment2, digits) << "\n";
    } else if (*cmd_joint) {
      std::ifstream in(joint_path);
      if (!in) throw std::invalid_argument("cannot open file '" + joint_path + "'");
      const couples::ParsedJoint parsed = couples::parse_joint_csv(in);
      const couples::JointLaw& joint = parsed.joint;
      detail::print_rv_line(out, "marginal X:", couples::marginal_x(joint).probs, digits);
      detail::print_rv_line(out, "marginal Y:", couples::marginal_y(joint).probs, digits);
      out << "independent: " << (couples::is_independent(joint) ? "true" : "false")
          << "\n";
      const moments::PairedRv pair{joint};
      out << "covariance: " << detail::fmt(moments::covariance(pair), digits) << "\n";
      try {
        out << "correlation: " << detail::fmt(moments::correlation(pair), digits) << "\n";
      } catch (const std::domain_error&) {
        out << "correlation: undefined (zero variance)\n";
      }
      double diag_gap = 0.0;
      for (double s : {-1.0, 0.5, 1.0}) {
        diag_gap = std::max(diag_gap,
                            std::fabs(couples::joint_mgf(joint, s, s) -
                                      couples::joint_mgf(joint, s, 0.0) *
                                          couples::joint_mgf(joint, 0.0, s)));
      }
      out << "diagonal MGF factorizes: " << (diag_gap <= 1e-12 ? "true" : "false") << "\n";
      if (parsed.renormalized) out << "renormalized: true\n";
      if (given_y) {
        std::size_t j = joint.y_values.size();
        for (std::size_t c = 0; c < joint.y_values.size(); ++c) {
          if (joint.y_values[c] == *given_y) j = c;
        }
        if (j == joint.y_values.size()) {
          throw std::domain_error("joint: Y value not in the table");
        }
        const couples::ConditionalLaw cond = couples::conditional_law(joint, j);
        std::ostringstream label;
        label << "conditional law X | Y=" << *given_y << ":";
        detail::print_rv_line(out, label.str().c_str(), cond.probs, digits);
        out << "conditional expectation E[X | Y=" << *given_y << "]: "
            << detail::fmt(
                   couples::conditional_expectation(joint, [](double x) { return x; }, j),
                   digits)
            << "\n";
      }
    } else if (*cmd_bayes) {
      if (priors.size() != likelihoods.size()) {
        throw UsageError("bayes: --priors and --likelihoods must have the same length");
      }
      finite_space::CausePartition partition;
      Rational total = 0;
      for (double p : priors) {
        partition.priors.push_back(exact_from_double(p));
        total += partition.priors.back();
      }
      if (std::fabs(to_double(total - 1)) > 1e-9) {
        throw std::domain_error("bayes: priors must sum to 1 (within 1e-9)");
      }
      for (Rational& p : partition.priors) p /= total;
      for (double l : likelihoods) partition.likelihoods.push_back(exact_from_double(l));
      // Causes with prior 0 cannot have occurred; they get posterior 0 and the
      // library formula runs on the positive-prior restriction.
      finite_space::CausePartition live;
      std::vector<std::size_t> live_index;
      for (std::size_t i = 0; i < partition.priors.size(); ++i) {
        if (partition.priors[i] > 0) {
          live.priors.push_back(partition.priors[i]);
          live.likelihoods.push_back(partition.likelihoods[i]);
          live_index.push_back(i);
        }
      }
      out << "evidence: "
          << detail::fmt(to_double(finite_space::total_probability(live)), digits) << "\n";
      std::vector<Rational> posterior(partition.priors.size(), Rational(0));
      const std::vector<Rational> live_posterior = finite_space::bayes_posterior(live);
      for (std::size_t i = 0; i < live_index.size(); ++i) {
        posterior[live_index[i]] = live_posterior[i];
      }
      for (std::size_t i = 0; i < posterior.size(); ++i) {
        out << "posterior " << i + 1 << ": " << detail::fmt(to_double(posterior[i]), digits)
            << "\n";
      }
    } else if (*cmd_limits) {
      std::vector<std::pair<std::int64_t, double>> table;
      for (std::int64_t n : grid) {
        double metric = 0.0;
        if (*lim_pois) {
          metric = limits::binomial_poisson_distance(n, lim_lambda, kmax).metric;
        } else if (*lim_local) {
          metric = limits::local_limit_ratio_error(n, lim_p, lim_a, lim_b).metric;
        } else {
          metric = limits::clt_interval_error(n, lim_p, lim_a, lim_b).metric;
        }
        table.emplace_back(n, metric);
      }
      if (as_csv) {
        out << "n,metric\n";
        for (const auto& [n, metric] : table) {
          out << n << "," << detail::fmt(metric, digits) << "\n";
        }
      } else {
        char line[96];
        std::snprintf(line, sizeof line, "%12s  %-14s", "n", "metric");
        out << line << "\n";
        for (const auto& [n, metric] : table) {
          std::snprintf(line, sizeof line, "%12lld  %-14s", static_cast<long long>(n),
                        detail::fmt(metric, digits).c_str());
          out << line << "\n";
        }
      }
    } else if (*cmd_demo) {
      if (*demo_umbrella) {
        out << detail::fmt(to_double(detail::umbrella_posterior(umbrella_p)), digits)
            << "\n";
      } else if (*demo_disease) {
        const finite_space::CausePartition partition{
            {Rational(3, 10), Rational(7, 10)}, {Rational(9, 10), Rational(2, 10)}};
        out << detail::fmt(to_double(finite_space::bayes_posterior(partition)[0]), digits)
            << "\n";
      } else if (*demo_lazy) {
        const auto law = distributions::Law::binomial(20, 0.25);
        out << detail::fmt(1.0 - distributions::cdf(law, 9.0), digits) << "\n";
      } else if (*demo_bernstein) {
        const auto space = finite_space::uniform_space(4);  // cards 112 121 211 222
        const std::vector<finite_space::Event> events{
            finite_space::make_event({0, 1}),   // 1 in first place
            finite_space::make_event({0, 2}),   // 1 in second place
            finite_space::make_event({1, 2})};  // 1 in third place
        const auto report = finite_space::independence_report(space, events);
        out << "pairwise: " << (report.pairwise ? "true" : "false") << "\n";
        out << "mutual: " << (report.mutual ? "true" : "false") << "\n";
        out << "global: " << (report.global ? "true" : "false") << "\n";
      }
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace probkit::cli
