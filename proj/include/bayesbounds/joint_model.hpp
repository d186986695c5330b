#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bayesbounds {

// Posterior vector (a_1, ..., a_k) over the classes: nonnegative, summing to
// one within 1e-9. Stored as given; no renormalization happens here, so
// extremal constructions are not perturbed.
class PosteriorProfile {
 public:
  explicit PosteriorProfile(std::vector<double> a);

  std::size_t k() const noexcept { return a_.size(); }
  double operator[](std::size_t i) const { return a_[i]; }
  std::span<const double> values() const noexcept { return a_; }
  double max() const;

  friend bool operator==(const PosteriorProfile&, const PosteriorProfile&) = default;

 private:
  std::vector<double> a_;
};

struct ValidateOptions {
  // |sum - 1| within this is accepted and divided out.
  double mass_tolerance = 1e-9;
  // Accept any positive total mass and divide it out.
  bool allow_any_mass = false;
};

// Joint distribution of (Y, X) on [k] x [n]: w(y, x) = P(Y = y, X = x).
// Immutable; only obtainable through validate_joint.
class JointModel {
 public:
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  double operator()(std::size_t y, std::size_t x) const { return w_[y * n_ + x]; }
  std::span<const double> row(std::size_t y) const {
    return std::span<const double>(w_).subspan(y * n_, n_);
  }
  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const JointModel&, const JointModel&) = default;

 private:
  JointModel(std::size_t k, std::size_t n, std::vector<double> w)
      : k_(k), n_(n), w_(std::move(w)) {}

  friend JointModel validate_joint(const std::vector<std::vector<double>>& raw,
                                   const ValidateOptions& options);

  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<double> w_;
};

// Errors: kBadShape (empty or ragged), kNonFinite, kNegativeEntry,
// kTooFewClasses, kMassNotOne.
JointModel validate_joint(const std::vector<std::vector<double>>& raw,
                          const ValidateOptions& options = {});

// Distribution of X: mu(x) = sum_y w(y, x).
std::vector<double> marginal(const JointModel& model);

// rho_y(x) = w(y, x) / mu(x). Throws kZeroMarginal when mu(x) == 0.
PosteriorProfile posterior(const JointModel& model, std::size_t x);

}  // namespace bayesbounds
