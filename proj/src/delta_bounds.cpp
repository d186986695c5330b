#include "bayesbounds/delta_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "bayesbounds/error.hpp"

namespace bayesbounds {

namespace {

void require_classes(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::kTooFewClasses, "k = " + std::to_string(k));
}

double checked_delta(std::size_t k, double delta) {
  require_classes(k);
  const double top = static_cast<double>(k - 1);
  if (!(delta >= -kCeilSnap && delta <= top + kCeilSnap)) {
    throw Error(ErrorCode::kOutOfRange, "delta " + std::to_string(delta) + " outside [0, " +
                                            std::to_string(k - 1) + "]");
  }
  return std::clamp(delta, 0.0, top);
}

}  // namespace

long long snapped_ceil(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kCeilSnap) return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(x));
}

double pairwise_abs_difference_sum(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  if (std::is_sorted(sorted.begin(), sorted.end(), std::greater<>())) {
    std::reverse(sorted.begin(), sorted.end());
  } else {
    std::sort(sorted.begin(), sorted.end());
  }
  // In ascending order, the j-th value (1-based) is the larger of j - 1 pairs
  // and the smaller of m - j pairs.
  const double m = static_cast<double>(sorted.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    sum += sorted[j] * (2.0 * static_cast<double>(j + 1) - m - 1.0);
  }
  return std::max(sum, 0.0);
}

DeltaValue delta(const JointModel& model) {
  std::vector<double> column(model.k());
  double total = 0.0;
  for (std::size_t x = 0; x < model.n(); ++x) {
    for (std::size_t y = 0; y < model.k(); ++y) column[y] = model(y, x);
    total += pairwise_abs_difference_sum(column);
  }
  return {model.k(), total};
}

DeltaValue delta_of_profile(const PosteriorProfile& a) {
  return {a.k(), pairwise_abs_difference_sum(a.values())};
}

double delta_lower_bound(std::size_t k, double delta) {
  delta = checked_delta(k, delta);
  return 1.0 - (1.0 + delta) / static_cast<double>(k);
}

double delta_upper_bound(std::size_t k, double delta) {
  delta = checked_delta(k, delta);
  const double kd = static_cast<double>(k);
  const double c = static_cast<double>(snapped_ceil(delta));
  return 1.0 - (kd + 1.0 + delta - 2.0 * c) / ((kd - c) * (kd + 1.0 - c));
}

double delta_upper_bound_simpl(std::size_t k, double delta) {
  delta = checked_delta(k, delta);
  return 1.0 - 1.0 / (static_cast<double>(k) - delta);
}

PosteriorProfile extremal_low_profile(std::size_t k, double d) {
  d = checked_delta(k, d);
  const double kd = static_cast<double>(k);
  std::vector<double> a(k, (kd - 1.0 - d) / (kd * (kd - 1.0)));
  a[0] = (1.0 + d) / kd;
  return PosteriorProfile(std::move(a));
}

PosteriorProfile extremal_high_profile(std::size_t k, double d) {
  d = checked_delta(k, d);
  const double kd = static_cast<double>(k);
  const auto c = static_cast<std::size_t>(snapped_ceil(d));
  const double cd = static_cast<double>(c);
  // 1 - U(d), written without the subtraction from 1.
  const double top = (kd + 1.0 + d - 2.0 * cd) / ((kd - cd) * (kd + 1.0 - cd));
  std::vector<double> a(k, 0.0);
  std::fill(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k - c), top);
  if (c >= 1) a[k - c] = std::max(0.0, cd - d) / (kd + 1.0 - cd);
  return PosteriorProfile(std::move(a));
}

}  // namespace bayesbounds
