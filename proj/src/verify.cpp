#include "bayesbounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bayesbounds/bayes.hpp"
#include "bayesbounds/delta_bounds.hpp"
#include "bayesbounds/entropy_bounds.hpp"
#include "bayesbounds/error.hpp"
#include "bayesbounds/families.hpp"
#include "bayesbounds/model_io.hpp"
#include "bayesbounds/report.hpp"
#include "bayesbounds/simplex_oracle.hpp"

namespace bayesbounds {

JointModel random_model(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution sparse(0.25);
  std::bernoulli_distribution drop(0.5);
  while (true) {
    const bool thin = sparse(rng);
    std::vector<std::vector<double>> rows(k, std::vector<double>(n));
    double total = 0.0;
    for (auto& row : rows) {
      for (double& v : row) {
        v = unit(rng);
        if (thin && drop(rng)) v = 0.0;
        total += v;
      }
    }
    if (total > 0.0) return validate_joint(rows, {.allow_any_mass = true});
  }
}

std::vector<CheckLine> verify_sandwich(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick_k(options.min_k, options.max_k);
  std::uniform_int_distribution<std::size_t> pick_n(options.min_n, options.max_n);
  double worst = 1.0;
  std::size_t failures = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < options.sandwich_models; ++i) {
    const JointModel model = random_model(rng, pick_k(rng), pick_n(rng));
    try {
      worst = std::min(worst, evaluate(model).min_slack());
    } catch (const Error& e) {
      if (failures++ == 0) first_failure = std::string(e.what()) + "\n" + model_to_csv(model);
    }
  }
  std::ostringstream detail;
  detail << options.sandwich_models << " models, min slack " << format_double(worst);
  if (failures > 0) detail << ", " << failures << " failures; first: " << first_failure;
  return {{"sandwich", "L<=p*<=U<=Usimpl and L_FM<=p*<=U_FM", failures == 0, detail.str()}};
}

std::vector<CheckLine> verify_bayes_oracle(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed + 1);
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t k = options.min_k; k <= options.max_k; ++k) {
    for (std::size_t n = options.min_n; n <= options.max_n; ++n) {
      if (std::pow(static_cast<double>(k), static_cast<double>(n)) <= options.brute_force_limit) {
        shapes.emplace_back(k, n);
      }
    }
  }
  if (shapes.empty()) return {{"bayes", "brute force = bayes_error", false, "no admissible shapes"}};
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  double worst = 0.0;
  double worst_random = 1.0;  // min over models of (random classifier error - p*)
  std::uniform_int_distribution<std::size_t> label(0, options.max_k - 1);
  for (std::size_t i = 0; i < options.brute_force_models; ++i) {
    const auto [k, n] = shapes[pick(rng)];
    const JointModel model = random_model(rng, k, n);
    const double p_star = bayes_error(model);
    worst = std::max(worst, std::abs(brute_force_bayes_error(model) - p_star));
    worst = std::max(worst, std::abs(classifier_error(model, bayes_classifier(model)) - p_star));
    Classifier f(n);
    for (auto& y : f) y = label(rng) % k;
    worst_random = std::min(worst_random, classifier_error(model, f) - p_star);
  }
  std::ostringstream detail;
  detail << options.brute_force_models << " models, max |brute - p*| " << format_double(worst);
  std::ostringstream detail2;
  detail2 << "min (p_f - p*) over random classifiers " << format_double(worst_random);
  return {{"bayes", "brute force = bayes_error within 1e-12", worst <= 1e-12, detail.str()},
          {"bayes", "p* <= p_f for random classifiers", worst_random >= -1e-12, detail2.str()}};
}

std::vector<CheckLine> verify_simplex_oracle(const VerifyOptions& options) {
  std::vector<CheckLine> lines;
  for (const auto& [k, grid] : options.oracle_cases) {
    const OracleReport report = simplex_grid_oracle(k, grid);
    std::ostringstream detail;
    detail << report.checked << " profiles, " << report.violations.size() << " violations, "
           << report.lower_attained << " attain L, " << report.upper_attained << " attain U";
    if (!report.violations.empty()) {
      const auto& v = report.violations.front();
      detail << "; first: side " << v.side << " delta " << v.delta;
    }
    lines.push_back({"oracle", "exact grid k=" + std::to_string(k) + " N=" + std::to_string(grid),
                     report.passed(), detail.str()});
  }
  return lines;
}

std::vector<CheckLine> verify_extremal(const VerifyOptions& options) {
  double worst_delta = 0.0;
  double worst_value = 0.0;
  double worst_model = 0.0;
  for (std::size_t k = std::max<std::size_t>(options.min_k, 2); k <= options.max_k; ++k) {
    for (double d : [&] {
           std::vector<double> g;
           const auto steps = static_cast<std::size_t>(
               std::llround(static_cast<double>(k - 1) / options.extremal_step));
           for (std::size_t i = 0; i <= steps; ++i) {
             g.push_back(static_cast<double>(k - 1) * static_cast<double>(i) /
                         static_cast<double>(steps));
           }
           return g;
         }()) {
      const PosteriorProfile low = extremal_low_profile(k, d);
      const PosteriorProfile high = extremal_high_profile(k, d);
      worst_delta = std::max({worst_delta, std::abs(delta_of_profile(low).value - d),
                              std::abs(delta_of_profile(high).value - d)});
      worst_value = std::max({worst_value, std::abs(1.0 - low.max() - delta_lower_bound(k, d)),
                              std::abs(1.0 - high.max() - delta_upper_bound(k, d))});
      // Round trip through a two-observation pure model.
      std::vector<std::size_t> forward(k), backward(k);
      for (std::size_t i = 0; i < k; ++i) {
        forward[i] = i;
        backward[i] = k - 1 - i;
      }
      for (const auto* profile : {&low, &high}) {
        const JointModel model = pure_model(*profile, {0.25, 0.75}, {forward, backward});
        worst_model = std::max({worst_model, std::abs(delta(model).value - d),
                                std::abs(bayes_error(model) - (1.0 - profile->max()))});
      }
    }
  }
  std::ostringstream d1, d2, d3;
  d1 << "max |delta - d| " << format_double(worst_delta);
  d2 << "max |1 - max a - bound| " << format_double(worst_value);
  d3 << "max pure-model round-trip error " << format_double(worst_model);
  return {{"extremal", "extremal profiles have delta = d", worst_delta <= 1e-12, d1.str()},
          {"extremal", "extremal profiles attain L and U", worst_value <= 1e-12, d2.str()},
          {"extremal", "pure model round trip", worst_model <= 1e-12, d3.str()}};
}

std::vector<CheckLine> verify_counterexample() {
  const CounterexampleReport r = renyi_counterexample_check();
  return {{"counterexample", "P(e) = 1/2", r.error_is_half, format_double(r.error_probability)},
          {"counterexample", "H_beta(W|M) = 0 for beta in {0.5, 2, 5}", r.renyi_is_zero,
           format_double(r.renyi_half) + " " + format_double(r.renyi_two) + " " +
               format_double(r.renyi_five)},
          {"counterexample", "H_S(e) = 1 bit", r.error_entropy_is_one,
           format_double(r.error_entropy_bits)},
          {"counterexample", "upper-bound numerator = -1 < 0", r.bound_false,
           format_double(r.upper_numerator)}};
}

std::vector<CheckLine> run_verify(const std::vector<std::string>& suites,
                                  const VerifyOptions& options) {
  std::vector<CheckLine> lines;
  auto append = [&lines](std::vector<CheckLine> more) {
    lines.insert(lines.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
  };
  for (const auto& suite : suites) {
    if (suite == "sandwich") {
      append(verify_sandwich(options));
    } else if (suite == "bayes") {
      append(verify_bayes_oracle(options));
    } else if (suite == "oracle") {
      append(verify_simplex_oracle(options));
    } else if (suite == "extremal") {
      append(verify_extremal(options));
    } else if (suite == "counterexample") {
      append(verify_counterexample());
    } else {
      throw Error(ErrorCode::kBadParam, "unknown suite '" + suite + "'");
    }
  }
  return lines;
}

}  // namespace bayesbounds
