#include "bayesbounds/simplex_oracle.hpp"

#include <algorithm>
#include <functional>

#include "bayesbounds/error.hpp"
#include "json.hpp"

namespace bayesbounds {

namespace exact {

namespace mp = boost::multiprecision;

Rational ceil(const Rational& x) {
  const mp::cpp_int num = mp::numerator(x);
  const mp::cpp_int den = mp::denominator(x);  // always positive
  mp::cpp_int q = num / den;                   // truncates toward zero
  if (q * den != num && num > 0) q += 1;
  return Rational(q);
}

Rational lower_bound(std::size_t k, const Rational& delta) {
  return 1 - (1 + delta) / Rational(k);
}

Rational upper_bound(std::size_t k, const Rational& delta) {
  const Rational kk(k);
  const Rational c = ceil(delta);
  return 1 - (kk + 1 + delta - 2 * c) / ((kk - c) * (kk + 1 - c));
}

Rational upper_bound_simpl(std::size_t k, const Rational& delta) {
  return 1 - 1 / (Rational(k) - delta);
}

std::vector<Rational> low_profile(std::size_t k, const Rational& delta) {
  const Rational kk(k);
  std::vector<Rational> a(k, 1 / kk - delta / (kk * (kk - 1)));
  a[0] = (1 + delta) / kk;
  return a;
}

std::vector<Rational> high_profile(std::size_t k, const Rational& delta) {
  const Rational kk(k);
  const Rational c = ceil(delta);
  const auto ci = static_cast<std::size_t>(mp::numerator(c));
  const Rational top = 1 - upper_bound(k, delta);
  std::vector<Rational> a(k, Rational(0));
  for (std::size_t i = 0; i < k - ci; ++i) a[i] = top;
  if (ci >= 1) a[k - ci] = (c - delta) / (kk + 1 - c);
  return a;
}

Rational pairwise_delta(const std::vector<Rational>& a) {
  Rational total(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) total += mp::abs(a[i] - a[j]);
  }
  return total;
}

std::string to_string(const Rational& x) {
  const auto den = mp::denominator(x);
  if (den == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + den.str();
}

}  // namespace exact

namespace {

using exact::Rational;

std::vector<Rational> sorted_desc(std::vector<Rational> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

class GridChecker {
 public:
  GridChecker(std::size_t k, std::size_t grid) : k_(k), grid_(grid) {
    report_.k = k;
    report_.grid = grid;
  }

  void check(const std::vector<std::size_t>& counts) {
    ++report_.checked;
    std::vector<Rational> a;
    a.reserve(k_);
    for (auto c : counts) a.emplace_back(Rational(c) / Rational(grid_));

    const Rational d = exact::pairwise_delta(a);
    const Rational value = 1 - *std::max_element(a.begin(), a.end());
    if (d < 0 || d > Rational(k_ - 1)) {
      add(a, d, value, d, "range");
      return;
    }
    const Rational lo = exact::lower_bound(k_, d);
    const Rational hi = exact::upper_bound(k_, d);
    const Rational simpl = exact::upper_bound_simpl(k_, d);
    if (lo > value) add(a, d, value, lo, "lower");
    if (value > hi) add(a, d, value, hi, "upper");
    if (hi > simpl) add(a, d, hi, simpl, "simpl");

    const bool integral = exact::ceil(d) == d;
    if ((hi == simpl) != integral) add(a, d, hi, simpl, "simpl_exactness");

    const auto sorted = sorted_desc(a);
    const bool low_shape = sorted == exact::low_profile(k_, d);
    const bool high_shape = sorted == exact::high_profile(k_, d);
    if ((value == lo) != low_shape) add(a, d, value, lo, "lower_equality");
    if ((value == hi) != high_shape) add(a, d, value, hi, "upper_equality");

    if (value == lo) ++report_.lower_attained;
    if (value == hi) ++report_.upper_attained;
    if (value == simpl) ++report_.simpl_attained;
  }

  OracleReport take() { return std::move(report_); }

 private:
  void add(const std::vector<Rational>& a, const Rational& d, const Rational& value,
           const Rational& bound, const char* side) {
    OracleViolation v;
    for (const auto& ai : a) v.profile.push_back(exact::to_string(ai));
    v.delta = exact::to_string(d);
    v.value = exact::to_string(value);
    v.bound = exact::to_string(bound);
    v.side = side;
    report_.violations.push_back(std::move(v));
  }

  std::size_t k_;
  std::size_t grid_;
  OracleReport report_;
};

// Lexicographic enumeration of compositions of `remaining` into the slots
// counts[i..k).
void enumerate(std::vector<std::size_t>& counts, std::size_t i, std::size_t remaining,
               GridChecker& checker) {
  if (i + 1 == counts.size()) {
    counts[i] = remaining;
    checker.check(counts);
    return;
  }
  for (std::size_t c = 0; c <= remaining; ++c) {
    counts[i] = c;
    enumerate(counts, i + 1, remaining - c, checker);
  }
}

}  // namespace

double simplex_grid_size(std::size_t k, std::size_t grid) {
  if (k == 0) return 0.0;
  // C(grid + k - 1, k - 1) built incrementally; each partial product is an
  // exact binomial coefficient while it stays below 2^53.
  double count = 1.0;
  for (std::size_t i = 1; i < k; ++i) {
    count = count * static_cast<double>(grid + i) / static_cast<double>(i);
    if (count > 1e15) return count;
  }
  return std::round(count);
}

OracleReport simplex_grid_oracle(std::size_t k, std::size_t grid) {
  if (k < 2) throw Error(ErrorCode::kTooFewClasses, "k = " + std::to_string(k));
  if (grid == 0) throw Error(ErrorCode::kBadParam, "grid resolution must be positive");
  if (simplex_grid_size(k, grid) > kOracleLimit) {
    throw Error(ErrorCode::kTooLarge, "more than 1e7 grid profiles");
  }
  GridChecker checker(k, grid);
  std::vector<std::size_t> counts(k, 0);
  enumerate(counts, 0, grid, checker);
  return checker.take();
}

std::string OracleReport::to_json() const {
  nlohmann::json doc;
  doc["k"] = k;
  doc["grid"] = grid;
  doc["checked"] = checked;
  doc["lower_attained"] = lower_attained;
  doc["upper_attained"] = upper_attained;
  doc["simpl_attained"] = simpl_attained;
  doc["violations"] = nlohmann::json::array();
  for (const auto& v : violations) {
    doc["violations"].push_back({{"profile", v.profile},
                                 {"delta", v.delta},
                                 {"value", v.value},
                                 {"bound", v.bound},
                                 {"side", v.side}});
  }
  return doc.dump();
}

}  // namespace bayesbounds
