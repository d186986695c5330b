#include "bayesbounds/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bayesbounds/bayes.hpp"
#include "bayesbounds/delta_bounds.hpp"
#include "bayesbounds/entropy_bounds.hpp"
#include "test_support.hpp"

namespace bb = bayesbounds;
using bb::ErrorCode;

namespace {

void expect_profile(const bb::PosteriorProfile& a, const std::vector<double>& want,
                    double tol = 1e-15) {
  ASSERT_EQ(a.k(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(a[i], want[i], tol) << i;
}

std::vector<double> sorted(const bb::PosteriorProfile& a) {
  std::vector<double> v(a.values().begin(), a.values().end());
  std::sort(v.begin(), v.end());
  return v;
}

// Q(x) in long double: Taylor series of erf(x / sqrt 2) below 2.5, Laplace
// continued fraction above.
long double q_oracle(long double x) {
  const long double pi = std::numbers::pi_v<long double>;
  if (x < 2.5L) {
    const long double z = x / std::sqrt(2.0L);
    long double term = z, sum = z;
    for (int n = 1; n < 200; ++n) {
      term *= -z * z / n;
      sum += term / (2 * n + 1);
    }
    return 0.5L * (1.0L - 2.0L / std::sqrt(pi) * sum);
  }
  long double f = x;
  for (int n = 400; n >= 1; --n) f = x + n / f;
  return std::exp(-x * x / 2) / std::sqrt(2 * pi) / f;
}

}  // namespace

TEST(NormalTail, MatchesSeriesOracle) {
  for (int i = 1; i <= 160; ++i) {
    const long double x = i / 20.0L;
    const long double want = q_oracle(x);
    const double got = bb::normal_tail(static_cast<double>(x));
    EXPECT_NEAR(got / static_cast<double>(want), 1.0, 1e-12) << "x=" << static_cast<double>(x);
  }
}

TEST(NormalTail, FrozenValues) {
  // 40-digit reference values.
  const std::pair<double, double> table[] = {
      {0.5, 0.30853753872598689636}, {1.0, 0.15865525393145705141},
      {2.0, 0.0227501319481792072},  {3.0, 0.0013498980316300945267},
      {5.0, 2.8665157187919391167e-7}, {8.0, 6.2209605742717841235e-16},
  };
  for (const auto& [x, q] : table) EXPECT_NEAR(bb::normal_tail(x) / q, 1.0, 1e-12) << x;
}

TEST(Qpsk, Examples) {
  EXPECT_NEAR(bb::qpsk_q(1e-14), 0.5, 1e-6);
  EXPECT_NEAR(bb::qpsk_q(0.5), 0.15865525393145705, 1e-15);
  EXPECT_LT(bb::qpsk_q(50.0), 1e-20);
  EXPECT_BB_ERROR(bb::qpsk_q(-1.0), ErrorCode::kBadParam);
}

TEST(PureModel, Examples) {
  const bb::PosteriorProfile a({0.8, 0.2});
  const auto model = bb::pure_model(a, {0.5, 0.5}, {{0, 1}, {1, 0}});
  EXPECT_EQ(model, bb::validate_joint({{0.4, 0.1}, {0.1, 0.4}}));
  const auto single = bb::pure_model(bb::PosteriorProfile({0.5, 0.3, 0.2}));
  EXPECT_EQ(single.n(), 1u);
  EXPECT_DOUBLE_EQ(single(1, 0), 0.3);
  EXPECT_BB_ERROR(bb::pure_model(a, {0.5, -0.5}, {{0, 1}, {1, 0}}), ErrorCode::kBadWeights);
  EXPECT_BB_ERROR(bb::pure_model(a, {0.5, 0.5}, {{0, 0}, {1, 0}}), ErrorCode::kBadPermutation);
  EXPECT_BB_ERROR(bb::pure_model(a, {1.0}, {{0, 1}, {1, 0}}), ErrorCode::kBadPermutation);
}

TEST(PureModel, InvariantUnderPermutations) {
  std::mt19937_64 rng(37);
  const bb::PosteriorProfile a({0.5, 0.3, 0.15, 0.05});
  const double p = bb::bayes_error(bb::pure_model(a));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<std::size_t>> perms(3, {0, 1, 2, 3});
    for (auto& perm : perms) std::shuffle(perm.begin(), perm.end(), rng);
    const auto model = bb::pure_model(a, {0.2, 0.3, 0.5}, perms);
    EXPECT_NEAR(bb::bayes_error(model), p, 1e-15);
    EXPECT_NEAR(bb::delta(model).value, bb::delta_of_profile(a).value, 1e-14);
  }
}

TEST(Binomial, Examples) {
  expect_profile(bb::binomial_profile(1, 0.3), {0.7, 0.3});
  expect_profile(bb::binomial_profile(2, 0.2), {0.64, 0.16, 0.16, 0.04});
  expect_profile(bb::binomial_profile(2, 0.5), {0.25, 0.25, 0.25, 0.25});
  EXPECT_BB_ERROR(bb::binomial_profile(0, 0.2), ErrorCode::kBadParam);
  EXPECT_BB_ERROR(bb::binomial_profile(2, 1.5), ErrorCode::kBadParam);
}

TEST(Exponential, Examples) {
  expect_profile(bb::exponential_profile(2, 0.3), {0.7, 0.3});
  expect_profile(bb::exponential_profile(5, 0.5), {0.2, 0.2, 0.2, 0.2, 0.2});
  expect_profile(bb::exponential_profile(3, 1.0 / 3), {4.0 / 7, 2.0 / 7, 1.0 / 7});
}

TEST(Families, SymmetryInQ) {
  for (double q = 0.01; q <= 0.5; q += 0.01) {
    for (unsigned m = 1; m <= 4; ++m) {
      const auto a = sorted(bb::binomial_profile(m, q));
      const auto b = sorted(bb::binomial_profile(m, 1.0 - q));
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
    }
    for (std::size_t k : {2u, 3u, 6u, 9u}) {
      const auto a = sorted(bb::exponential_profile(k, q));
      const auto b = sorted(bb::exponential_profile(k, 1.0 - q));
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-14);
    }
  }
}

TEST(Families, ProfilesValidAndSorted) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double q = unit(rng);
    std::vector<bb::PosteriorProfile> profiles = {
        bb::binomial_profile(1 + trial % 6, q),
        bb::exponential_profile(2 + trial % 12, q),
        bb::comp_hi_profile(3 + trial % 20, 1.0 + 1.9 * unit(rng)),
    };
    const double p = 2.0 / 3 * unit(rng);
    const double lo = std::max(0.0, 2 * p - 1), hi = p / 2;
    profiles.push_back(bb::three_class_profile(p, lo + (hi - lo) * unit(rng)));
    for (const auto& a : profiles) {
      EXPECT_NEAR(std::accumulate(a.values().begin(), a.values().end(), 0.0), 1.0, 1e-12);
      EXPECT_TRUE(std::is_sorted(a.values().begin(), a.values().end(), std::greater<>()));
    }
  }
}

TEST(ThreeClass, Examples) {
  expect_profile(bb::three_class_profile(0.3, 0.1), {0.7, 0.2, 0.1});
  expect_profile(bb::three_class_profile(0.64, 0.32), {0.36, 0.32, 0.32}, 1e-15);
  expect_profile(bb::three_class_profile(2.0 / 3, 1.0 / 3), {1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_BB_ERROR(bb::three_class_profile(0.3, 0.2), ErrorCode::kOutOfDomain);
  EXPECT_BB_ERROR(bb::three_class_profile(0.8, 0.3), ErrorCode::kOutOfDomain);
}

TEST(CompLo, Examples) {
  const auto c = bb::comp_lo_profile(4, 2);
  expect_profile(c.profile, {0.5, 0.5, 0.0, 0.0});
  const auto three = bb::comp_lo_profile(3, 2).profile;
  EXPECT_NEAR(bb::delta_of_profile(three).value, 1.0, 1e-15);
  EXPECT_NEAR(bb::entropy_of_profile(three).nats, std::numbers::ln2, 1e-15);
  EXPECT_GT(bb::delta_lower_bound(3, 1.0), bb::fm_lower_bound(3, std::numbers::ln2));
  EXPECT_NEAR(bb::delta_of_profile(bb::comp_lo_profile(5, 5).profile).value, 0.0, 1e-15);
  EXPECT_BB_ERROR(bb::comp_lo_profile(2, 2), ErrorCode::kBadParam);
  EXPECT_BB_ERROR(bb::comp_lo_profile(5, 1), ErrorCode::kBadParam);
}

TEST(CompLo, ClosedForms) {
  for (std::size_t k = 3; k <= 30; ++k) {
    for (std::size_t l = 2; l <= k; ++l) {
      const auto a = bb::comp_lo_profile(k, l).profile;
      EXPECT_NEAR(bb::delta_of_profile(a).value, double(k - l), 1e-12);
      EXPECT_NEAR(bb::entropy_of_profile(a).nats, std::log(double(l)), 1e-13);
    }
  }
}

TEST(CompLo, Domain) {
  EXPECT_TRUE(bb::comp_lo_in_domain(6, 2));
  EXPECT_TRUE(bb::comp_lo_in_domain(6, 3));
  EXPECT_FALSE(bb::comp_lo_in_domain(6, 6));
  EXPECT_FALSE(bb::comp_lo_profile(6, 6).in_proposition_domain);
}

TEST(CompHi, Examples) {
  expect_profile(bb::comp_hi_profile(4, 2.0), {0.75, 1.0 / 12, 1.0 / 12, 1.0 / 12});
  const auto nine = bb::comp_hi_profile(9, 2.0);
  EXPECT_NEAR(bb::delta_of_profile(nine).value, 7.0, 1e-12);
  EXPECT_NEAR(1.0 - nine.max(), 1.0 / 9, 1e-15);
  EXPECT_NEAR(bb::comp_hi_profile(5, 1.0 + 1e-9).max(), 1.0, 1e-8);
  for (std::size_t k = 3; k <= 40; ++k) {
    for (double nu : {1.2, 1.5, 2.0, 2.7}) {
      if (nu >= double(k)) continue;
      EXPECT_NEAR(bb::delta_of_profile(bb::comp_hi_profile(k, nu)).value, double(k) - nu, 1e-12);
    }
  }
  EXPECT_BB_ERROR(bb::comp_hi_profile(4, 1.0), ErrorCode::kBadParam);
}

TEST(FamilySpec, JsonRoundTripAndDispatch) {
  bb::FamilySpec spec;
  spec.family = bb::Family::kExponential;
  spec.k = 3;
  spec.q = 1.0 / 3;
  const auto back = bb::FamilySpec::from_json(spec.to_json());
  EXPECT_EQ(back.family, bb::Family::kExponential);
  EXPECT_EQ(back.k, 3u);
  expect_profile(bb::family_profile(back), {4.0 / 7, 2.0 / 7, 1.0 / 7});

  const auto bin = bb::FamilySpec::from_json(R"({"family":"binomial","m":1,"eb_n0":0.5})");
  expect_profile(bb::family_profile(bin), {1 - 0.15865525393145705, 0.15865525393145705});
  EXPECT_BB_ERROR(bb::parse_family("gaussian"), ErrorCode::kBadParam);
  EXPECT_BB_ERROR(bb::family_profile(bb::FamilySpec::from_json(R"({"family":"exponential"})")),
                  ErrorCode::kBadParam);
  EXPECT_BB_ERROR(bb::FamilySpec::from_json("[1"), ErrorCode::kParseError);
  for (auto f : {bb::Family::kPure, bb::Family::kBinomial, bb::Family::kExponential,
                 bb::Family::kThreeClass, bb::Family::kCompLo, bb::Family::kCompHi}) {
    EXPECT_EQ(bb::parse_family(bb::to_string(f)), f);
  }
}
