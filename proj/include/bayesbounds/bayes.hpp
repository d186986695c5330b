#pragma once

#include <cstddef>
#include <vector>

#include "bayesbounds/joint_model.hpp"

namespace bayesbounds {

// Classifier: label (0-based class index) for each observation.
using Classifier = std::vector<std::size_t>;

// p_f = P(f(X) != Y) = 1 - sum_x w(f(x), x).
// Throws kLengthMismatch if f.size() != n, kBadLabel for labels >= k.
double classifier_error(const JointModel& model, const Classifier& f);

// f*(x) = smallest y maximizing w(y, x); exact floating-point ties.
// Columns with zero mass get label 0.
Classifier bayes_classifier(const JointModel& model);

// p* = 1 - sum_x max_y w(y, x).
double bayes_error(const JointModel& model);

inline constexpr double kBruteForceLimit = 1e7;

// Minimum error over all k^n classifiers, by exhaustive enumeration.
// Throws kTooLarge if k^n exceeds kBruteForceLimit.
double brute_force_bayes_error(const JointModel& model);

}  // namespace bayesbounds
