#pragma once

#include <cstddef>
#include <string>

#include "bayesbounds/joint_model.hpp"

namespace bayesbounds {

// Conditional entropy H(Y|X) in nats; lies in [0, ln k].
struct EntropyValue {
  std::size_t k = 0;
  double nats = 0.0;
};

// Order-beta conditional Renyi entropy, in bits.
struct RenyiValue {
  double beta = 1.0;
  double bits = 0.0;
};

// -sum_x mu(x) sum_y rho_y(x) ln rho_y(x), with 0 ln 0 = 0.
EntropyValue conditional_entropy(const JointModel& model);
EntropyValue entropy_of_profile(const PosteriorProfile& a);

// h2(p) = -p ln p - (1-p) ln(1-p), with h2(0) = h2(1) = 0.
double binary_entropy(double p);

// Phi(p) = p ln(k - 1) + h2(p) on [0, 1 - 1/k]; strictly increasing from 0
// to ln k. kOutOfRange outside the interval.
double phi(std::size_t k, double p);

// Lower bound on p* from H: the p in [0, 1 - 1/k] with Phi(p) = H, by
// bisection. H may overshoot [0, ln k] by 1e-12; further out throws
// kEntropyOutOfRange.
double fm_lower_bound(std::size_t k, double entropy);

// Upper bound on p* from H (nats). With e = ceil(exp(H)) - 1:
//   U_FM(H) = (e - 1)/e + (H - ln e) / (e (e + 1) ln(1 + 1/e)),
// and U_FM(0) = 0. exp(H) within 1e-9 of an integer is snapped first, so
// U_FM(ln m) = 1 - 1/m. Throws kNegativeEntropy for H < -1e-12.
double fm_upper_bound(double entropy);

// sum_m P(M=m) (1/(1-beta)) log2 sum_w P(W=w|M=m)^beta, where rows of the
// model index W and columns index M. beta == 1 gives Shannon H(W|M) in bits.
// Throws kBadBeta unless beta > 0 and finite.
RenyiValue renyi_conditional_entropy(const JointModel& model, double beta);

struct CounterexampleReport {
  double error_probability = 0.0;  // Bayes error of guessing M from W
  double mismatch_probability = 0.0;  // P(W != M)
  double renyi_half = 0.0;
  double renyi_two = 0.0;
  double renyi_five = 0.0;
  double error_entropy_bits = 0.0;  // H_S(e) = h2(P(e)) / ln 2
  double upper_numerator = 0.0;     // H_beta(W|M) - H_S(e), worst over the betas
  bool error_is_half = false;
  bool renyi_is_zero = false;
  bool error_entropy_is_one = false;
  bool bound_false = false;

  bool passed() const { return error_is_half && renyi_is_zero && error_entropy_is_one && bound_false; }
  std::string to_json() const;
};

// Two classes, P(W=1, M=1) = P(W=1, M=2) = 1/2. The claimed Renyi upper
// bound (H_beta(W|M) - H_S(e)) / N2 on P(e) evaluates to a negative number
// here, so it cannot hold. Checks hold to 1e-12.
CounterexampleReport renyi_counterexample_check();

}  // namespace bayesbounds
