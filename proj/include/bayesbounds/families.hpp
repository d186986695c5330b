#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bayesbounds/joint_model.hpp"

namespace bayesbounds {

// Pure model: observation x has weight weights[x] and its posterior is the
// profile permuted by perms[x], i.e. w(perms[x][i], x) = weights[x] * a_i.
// Throws kBadWeights (nonpositive, nonfinite, or not summing to 1 within
// 1e-9) and kBadPermutation (count mismatch or not a bijection of [0, k)).
JointModel pure_model(const PosteriorProfile& a, const std::vector<double>& weights,
                      const std::vector<std::vector<std::size_t>>& perms);

// Single observation with the identity permutation.
JointModel pure_model(const PosteriorProfile& a);

// The remaining constructors return profiles sorted nonincreasing.

// k = 2^m entries (1-q)^j q^(m-j), each with multiplicity C(m, j).
// Requires 1 <= m <= 20 and 0 < q < 1, else kBadParam.
PosteriorProfile binomial_profile(unsigned m, double q);

// a_i proportional to (1-q)^(i-1) q^(k-i), i = 1..k. Requires k >= 2 and
// 0 < q < 1, else kBadParam.
PosteriorProfile exponential_profile(std::size_t k, double q);

// (1-p, p-eps, eps) for p in [0, 2/3] and max(0, 2p-1) <= eps <= p/2
// (1e-12 slack), else kOutOfDomain. p* of the pure model is p.
PosteriorProfile three_class_profile(double p, double eps);

struct CompLoProfile {
  PosteriorProfile profile;
  // Whether (k, ell) is covered by the L(Delta) > L_FM(H) guarantee.
  bool in_proposition_domain = false;
};

// ell in {k-3, k-2, k-1} with ell >= 2, or ell = k-4 when 6 <= k <= 9.
bool comp_lo_in_domain(std::size_t k, std::size_t ell);

// ell entries 1/ell followed by zeros; Delta = k - ell, H = ln ell.
// Requires k >= 3 and 2 <= ell <= k, else kBadParam.
CompLoProfile comp_lo_profile(std::size_t k, std::size_t ell);

// (1 - (nu-1)/k, (nu-1)/(k(k-1)), ...); Delta = k - nu, p* = (nu-1)/k.
// Requires nu > 1 and k > nu, else kBadParam.
PosteriorProfile comp_hi_profile(std::size_t k, double nu);

// Standard normal upper tail Q(x).
double normal_tail(double x);

// Crossover probability of QPSK over AWGN: q = Q(sqrt(2 Eb/N0)).
// Requires eb_n0 > 0, else kBadParam.
double qpsk_q(double eb_n0);

enum class Family { kPure, kBinomial, kExponential, kThreeClass, kCompLo, kCompHi };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

// Serializable family description, e.g. {"family":"exponential","k":8,"q":0.3}.
// Only the fields the family uses are set.
struct FamilySpec {
  Family family = Family::kPure;
  std::optional<std::size_t> k;
  std::optional<unsigned> m;
  std::optional<double> q;
  std::optional<double> eb_n0;  // binomial alternative to q
  std::optional<double> p;
  std::optional<double> eps;
  std::optional<std::size_t> ell;
  std::optional<double> nu;
  std::vector<double> a;  // pure

  std::string to_json() const;
  static FamilySpec from_json(std::string_view text);
};

// Throws kBadParam for missing or inconsistent parameters.
PosteriorProfile family_profile(const FamilySpec& spec);

}  // namespace bayesbounds
