#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bayesbounds {

// Exact-arithmetic restatement of the Delta bounds. Deliberately shares no
// code with the floating-point evaluators in delta_bounds.hpp.
namespace exact {

using Rational = boost::multiprecision::cpp_rational;

Rational ceil(const Rational& x);
Rational lower_bound(std::size_t k, const Rational& delta);
Rational upper_bound(std::size_t k, const Rational& delta);
Rational upper_bound_simpl(std::size_t k, const Rational& delta);
// Extremal profiles for d = delta, sorted nonincreasing.
std::vector<Rational> low_profile(std::size_t k, const Rational& delta);
std::vector<Rational> high_profile(std::size_t k, const Rational& delta);
Rational pairwise_delta(const std::vector<Rational>& a);
std::string to_string(const Rational& x);

}  // namespace exact

struct OracleViolation {
  std::vector<std::string> profile;  // entries as "p/q"
  std::string delta;
  std::string value;  // 1 - max a_i
  std::string bound;
  // "range", "lower", "upper", "simpl", "simpl_exactness",
  // "lower_equality" or "upper_equality".
  std::string side;
};

struct OracleReport {
  std::size_t k = 0;
  std::size_t grid = 0;
  std::uint64_t checked = 0;
  std::uint64_t lower_attained = 0;
  std::uint64_t upper_attained = 0;
  std::uint64_t simpl_attained = 0;
  std::vector<OracleViolation> violations;  // in lexicographic profile order

  bool passed() const { return violations.empty(); }
  std::string to_json() const;
};

inline constexpr double kOracleLimit = 1e7;

// Number of profiles with entries in {0, 1/N, ..., 1}: C(N + k - 1, k - 1),
// saturating at a value above kOracleLimit.
double simplex_grid_size(std::size_t k, std::size_t grid);

// Enumerates every profile a with a_i = c_i / grid and checks, in exact
// rational arithmetic:
//   L(delta) <= 1 - max a <= U(delta) <= Usimpl(delta),
//   U == Usimpl iff delta is an integer,
//   1 - max a == L(delta) iff a permutes the low extremal profile for d = delta,
//   1 - max a == U(delta) iff a permutes the high extremal profile.
// Throws kTooFewClasses, kBadParam (grid == 0) or kTooLarge.
OracleReport simplex_grid_oracle(std::size_t k, std::size_t grid);

}  // namespace bayesbounds
