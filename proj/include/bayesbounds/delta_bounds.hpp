#pragma once

#include <cstddef>
#include <span>

#include "bayesbounds/joint_model.hpp"

namespace bayesbounds {

// Sum over class pairs of the total variation norm of mu_y - mu_z (sum of
// absolute atom differences, no 1/2 factor). Lies in [0, k - 1].
struct DeltaValue {
  std::size_t k = 0;
  double value = 0.0;
};

// Values within this distance of an integer are treated as that integer
// before taking a ceiling.
inline constexpr double kCeilSnap = 1e-9;

// ceil(x), with x first snapped to the nearest integer when within kCeilSnap.
long long snapped_ceil(double x);

// sum_{i<j} |v_i - v_j|, computed from the sorted values in O(m log m).
double pairwise_abs_difference_sum(std::span<const double> values);

DeltaValue delta(const JointModel& model);
DeltaValue delta_of_profile(const PosteriorProfile& a);

// Bounds on p* as functions of Delta in [0, k - 1]; kOutOfRange outside it
// (a 1e-9 overshoot is clamped).
//   L(D)      = 1 - (1 + D) / k
//   U(D)      = 1 - (k + 1 + D - 2 ceil D) / ((k - ceil D)(k + 1 - ceil D))
//   Usimpl(D) = 1 - 1 / (k - D)
// U is the piecewise-linear interpolant of Usimpl at the integers.
double delta_lower_bound(std::size_t k, double delta);
double delta_upper_bound(std::size_t k, double delta);
double delta_upper_bound_simpl(std::size_t k, double delta);

// Profile attaining the lower bound: a_1 = (1 + d)/k, the rest (k-1-d)/(k(k-1)).
PosteriorProfile extremal_low_profile(std::size_t k, double d);

// Profile attaining the upper bound: k - ceil(d) entries equal to 1 - U(d),
// then one entry (ceil(d) - d)/(k + 1 - ceil(d)), then zeros.
PosteriorProfile extremal_high_profile(std::size_t k, double d);

}  // namespace bayesbounds
