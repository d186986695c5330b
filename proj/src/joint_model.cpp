#include "bayesbounds/joint_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bayesbounds/error.hpp"

namespace bayesbounds {

namespace {

constexpr double kProfileTolerance = 1e-9;

// Neumaier-compensated sum; model masses are compared against 1 at 1e-9 and
// the idempotency check works at rounding level.
double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

}  // namespace

PosteriorProfile::PosteriorProfile(std::vector<double> a) : a_(std::move(a)) {
  if (a_.size() < 2) {
    throw Error(ErrorCode::kTooFewClasses,
                "profile needs at least 2 entries, got " + std::to_string(a_.size()));
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!std::isfinite(a_[i])) {
      throw Error(ErrorCode::kNonFinite, "profile entry " + std::to_string(i));
    }
    if (a_[i] < 0.0) {
      throw Error(ErrorCode::kNegativeEntry, "profile entry " + std::to_string(i));
    }
  }
  const double total = compensated_sum(a_);
  if (std::abs(total - 1.0) > kProfileTolerance) {
    throw Error(ErrorCode::kMassNotOne, "profile sums to " + std::to_string(total));
  }
}

double PosteriorProfile::max() const { return *std::max_element(a_.begin(), a_.end()); }

std::vector<std::vector<double>> JointModel::to_rows() const {
  std::vector<std::vector<double>> rows(k_);
  for (std::size_t y = 0; y < k_; ++y) {
    auto r = row(y);
    rows[y].assign(r.begin(), r.end());
  }
  return rows;
}

JointModel validate_joint(const std::vector<std::vector<double>>& raw,
                          const ValidateOptions& options) {
  if (raw.empty() || raw.front().empty()) {
    throw Error(ErrorCode::kBadShape, "empty matrix");
  }
  const std::size_t k = raw.size();
  const std::size_t n = raw.front().size();
  std::vector<double> w;
  w.reserve(k * n);
  for (std::size_t y = 0; y < k; ++y) {
    if (raw[y].size() != n) {
      throw Error(ErrorCode::kBadShape, "row " + std::to_string(y + 1) + " has " +
                                            std::to_string(raw[y].size()) +
                                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t x = 0; x < n; ++x) {
      const double v = raw[y][x];
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFinite,
                    "entry (" + std::to_string(y + 1) + "," + std::to_string(x + 1) + ")");
      }
      if (v < 0.0) {
        throw Error(ErrorCode::kNegativeEntry,
                    "entry (" + std::to_string(y + 1) + "," + std::to_string(x + 1) +
                        ") = " + std::to_string(v));
      }
      w.push_back(v);
    }
  }
  if (k < 2) {
    throw Error(ErrorCode::kTooFewClasses, "k = " + std::to_string(k));
  }

  const double total = compensated_sum(w);
  const double deviation = std::abs(total - 1.0);
  if (!(total > 0.0) || (deviation > options.mass_tolerance && !options.allow_any_mass)) {
    throw Error(ErrorCode::kMassNotOne, "total mass " + std::to_string(total));
  }
  // Already normalized up to rounding: leave entries untouched so that
  // validation is idempotent.
  const double rounding_level =
      64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(w.size());
  if (deviation > rounding_level) {
    for (double& v : w) v /= total;
  }
  return JointModel(k, n, std::move(w));
}

std::vector<double> marginal(const JointModel& model) {
  std::vector<double> mu(model.n(), 0.0);
  for (std::size_t y = 0; y < model.k(); ++y) {
    for (std::size_t x = 0; x < model.n(); ++x) mu[x] += model(y, x);
  }
  return mu;
}

PosteriorProfile posterior(const JointModel& model, std::size_t x) {
  if (x >= model.n()) {
    throw Error(ErrorCode::kOutOfRange, "observation index " + std::to_string(x));
  }
  double mu = 0.0;
  for (std::size_t y = 0; y < model.k(); ++y) mu += model(y, x);
  if (mu == 0.0) {
    throw Error(ErrorCode::kZeroMarginal, "observation " + std::to_string(x) + " has no mass");
  }
  std::vector<double> rho(model.k());
  for (std::size_t y = 0; y < model.k(); ++y) rho[y] = model(y, x) / mu;
  return PosteriorProfile(std::move(rho));
}

}  // namespace bayesbounds
