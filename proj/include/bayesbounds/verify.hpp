#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bayesbounds/joint_model.hpp"

namespace bayesbounds {

// Random k x n model: independent uniform entries, normalized. One draw in
// four also zeroes each entry with probability 1/2 so that null columns and
// degenerate posteriors get exercised.
JointModel random_model(std::mt19937_64& rng, std::size_t k, std::size_t n);

struct CheckLine {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240101;
  std::size_t sandwich_models = 100000;
  std::size_t min_k = 2, max_k = 8;
  std::size_t min_n = 1, max_n = 6;
  std::size_t brute_force_models = 1000;
  double brute_force_limit = 1e5;  // largest k^n in the Bayes oracle suite
  std::vector<std::pair<std::size_t, std::size_t>> oracle_cases = {{2, 50}, {3, 30}, {4, 15}};
  double extremal_step = 0.01;
};

inline const std::vector<std::string> kVerifySuites = {"sandwich", "bayes", "oracle", "extremal",
                                                      "counterexample"};

// Runs the named suites and returns one line per check.
std::vector<CheckLine> run_verify(const std::vector<std::string>& suites,
                                  const VerifyOptions& options = {});

std::vector<CheckLine> verify_sandwich(const VerifyOptions& options);
std::vector<CheckLine> verify_bayes_oracle(const VerifyOptions& options);
std::vector<CheckLine> verify_simplex_oracle(const VerifyOptions& options);
std::vector<CheckLine> verify_extremal(const VerifyOptions& options);
std::vector<CheckLine> verify_counterexample();

}  // namespace bayesbounds
