#include "bayesbounds/entropy_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bayesbounds/bayes.hpp"
#include "bayesbounds/error.hpp"
#include "json.hpp"

namespace bayesbounds {

namespace {

constexpr double kEntropySlack = 1e-12;

double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

EntropyValue conditional_entropy(const JointModel& model) {
  double h = 0.0;
  for (std::size_t x = 0; x < model.n(); ++x) {
    double mu = 0.0;
    for (std::size_t y = 0; y < model.k(); ++y) mu += model(y, x);
    if (mu == 0.0) continue;
    double column = 0.0;
    for (std::size_t y = 0; y < model.k(); ++y) column -= xlogx(model(y, x) / mu);
    h += mu * column;
  }
  const double top = std::log(static_cast<double>(model.k()));
  return {model.k(), std::clamp(h, 0.0, top)};
}

EntropyValue entropy_of_profile(const PosteriorProfile& a) {
  double h = 0.0;
  for (double ai : a.values()) h -= xlogx(ai);
  return {a.k(), std::clamp(h, 0.0, std::log(static_cast<double>(a.k())))};
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

double phi(std::size_t k, double p) {
  if (k < 2) throw Error(ErrorCode::kTooFewClasses, "k = " + std::to_string(k));
  const double top = 1.0 - 1.0 / static_cast<double>(k);
  if (!(p >= -kEntropySlack && p <= top + kEntropySlack)) {
    throw Error(ErrorCode::kOutOfRange, "p = " + std::to_string(p));
  }
  p = std::clamp(p, 0.0, top);
  return p * std::log(static_cast<double>(k - 1)) + binary_entropy(p);
}

double fm_lower_bound(std::size_t k, double entropy) {
  if (k < 2) throw Error(ErrorCode::kTooFewClasses, "k = " + std::to_string(k));
  const double h_max = std::log(static_cast<double>(k));
  if (!(entropy >= -kEntropySlack && entropy <= h_max + kEntropySlack)) {
    throw Error(ErrorCode::kEntropyOutOfRange,
                "H = " + std::to_string(entropy) + " outside [0, ln k]");
  }
  if (entropy <= 0.0) return 0.0;
  const double top = 1.0 - 1.0 / static_cast<double>(k);
  if (entropy >= h_max) return top;

  double lo = 0.0;
  double hi = top;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (phi(k, mid) < entropy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double fm_upper_bound(double entropy) {
  if (!(entropy >= -kEntropySlack) || std::isnan(entropy)) {
    throw Error(ErrorCode::kNegativeEntropy, "H = " + std::to_string(entropy));
  }
  if (entropy <= 0.0) return 0.0;
  double exp_h = std::exp(entropy);
  const double nearest = std::round(exp_h);
  if (std::abs(exp_h - nearest) <= 1e-9) exp_h = nearest;
  // For 0 < H the first segment (e = 1) applies even if exp(H) snapped to 1.
  const double e = std::max(1.0, std::ceil(exp_h) - 1.0);
  return (e - 1.0) / e + (entropy - std::log(e)) / (e * (e + 1.0) * std::log1p(1.0 / e));
}

RenyiValue renyi_conditional_entropy(const JointModel& model, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::kBadBeta, "beta = " + std::to_string(beta));
  }
  double total = 0.0;
  for (std::size_t m = 0; m < model.n(); ++m) {
    double p_m = 0.0;
    for (std::size_t w = 0; w < model.k(); ++w) p_m += model(w, m);
    if (p_m == 0.0) continue;
    double inner = 0.0;
    if (beta == 1.0) {
      for (std::size_t w = 0; w < model.k(); ++w) inner -= xlogx(model(w, m) / p_m);
      inner /= std::numbers::ln2;
    } else {
      double power_sum = 0.0;
      for (std::size_t w = 0; w < model.k(); ++w) {
        const double p = model(w, m) / p_m;
        if (p > 0.0) power_sum += std::pow(p, beta);
      }
      inner = std::log2(power_sum) / (1.0 - beta);
    }
    total += p_m * inner;
  }
  return {beta, total};
}

CounterexampleReport renyi_counterexample_check() {
  constexpr double kTol = 1e-12;
  // Rows are W (output), columns are M (input): w(W, M).
  const JointModel output_given_input = validate_joint({{0.5, 0.5}, {0.0, 0.0}});
  // Same joint law with the input M as the class: w(M, W).
  const JointModel input_given_output = validate_joint({{0.5, 0.0}, {0.5, 0.0}});

  CounterexampleReport r;
  r.error_probability = bayes_error(input_given_output);
  r.mismatch_probability = output_given_input(0, 1) + output_given_input(1, 0);
  r.renyi_half = renyi_conditional_entropy(output_given_input, 0.5).bits;
  r.renyi_two = renyi_conditional_entropy(output_given_input, 2.0).bits;
  r.renyi_five = renyi_conditional_entropy(output_given_input, 5.0).bits;
  r.error_entropy_bits = binary_entropy(r.error_probability) / std::numbers::ln2;
  r.upper_numerator = std::max({r.renyi_half, r.renyi_two, r.renyi_five}) - r.error_entropy_bits;

  r.error_is_half = std::abs(r.error_probability - 0.5) <= kTol &&
                    std::abs(r.mismatch_probability - 0.5) <= kTol;
  r.renyi_is_zero = std::abs(r.renyi_half) <= kTol && std::abs(r.renyi_two) <= kTol &&
                    std::abs(r.renyi_five) <= kTol;
  r.error_entropy_is_one = std::abs(r.error_entropy_bits - 1.0) <= kTol;
  r.bound_false = r.upper_numerator < 0.0 && std::abs(r.upper_numerator + 1.0) <= kTol;
  return r;
}

std::string CounterexampleReport::to_json() const {
  nlohmann::json doc{{"P_e", error_probability},
                     {"P_mismatch", mismatch_probability},
                     {"H_beta", {{"0.5", renyi_half}, {"2", renyi_two}, {"5", renyi_five}}},
                     {"H_S", error_entropy_bits},
                     {"ep_numerator", upper_numerator},
                     {"bound_false", bound_false},
                     {"passed", passed()}};
  return doc.dump();
}

}  // namespace bayesbounds
