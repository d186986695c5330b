#include "bayesbounds/bayes.hpp"

#include <algorithm>
#include <string>

#include "bayesbounds/error.hpp"

namespace bayesbounds {

namespace {

double error_from_correct_mass(double correct) { return std::clamp(1.0 - correct, 0.0, 1.0); }

// Depth-first over the label of each observation; every leaf sums its
// column contributions left to right, like classifier_error does.
void best_correct_mass(const JointModel& model, std::size_t x, double partial, double& best) {
  if (x == model.n()) {
    best = std::max(best, partial);
    return;
  }
  for (std::size_t y = 0; y < model.k(); ++y) {
    best_correct_mass(model, x + 1, partial + model(y, x), best);
  }
}

}  // namespace

double classifier_error(const JointModel& model, const Classifier& f) {
  if (f.size() != model.n()) {
    throw Error(ErrorCode::kLengthMismatch, "classifier has " + std::to_string(f.size()) +
                                                " labels for " + std::to_string(model.n()) +
                                                " observations");
  }
  double correct = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= model.k()) {
      throw Error(ErrorCode::kBadLabel, "label " + std::to_string(f[x]) + " at observation " +
                                            std::to_string(x));
    }
    correct += model(f[x], x);
  }
  return error_from_correct_mass(correct);
}

Classifier bayes_classifier(const JointModel& model) {
  Classifier f(model.n(), 0);
  for (std::size_t x = 0; x < model.n(); ++x) {
    for (std::size_t y = 1; y < model.k(); ++y) {
      if (model(y, x) > model(f[x], x)) f[x] = y;
    }
  }
  return f;
}

double bayes_error(const JointModel& model) {
  double correct = 0.0;
  for (std::size_t x = 0; x < model.n(); ++x) {
    double column_max = model(0, x);
    for (std::size_t y = 1; y < model.k(); ++y) column_max = std::max(column_max, model(y, x));
    correct += column_max;
  }
  return error_from_correct_mass(correct);
}

double brute_force_bayes_error(const JointModel& model) {
  double count = 1.0;
  for (std::size_t x = 0; x < model.n(); ++x) {
    count *= static_cast<double>(model.k());
    if (count > kBruteForceLimit) {
      throw Error(ErrorCode::kTooLarge, "k^n exceeds 1e7 classifiers");
    }
  }
  double best = 0.0;
  best_correct_mass(model, 0, 0.0, best);
  return error_from_correct_mass(best);
}

}  // namespace bayesbounds
