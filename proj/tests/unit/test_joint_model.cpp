#include "bayesbounds/joint_model.hpp"

#include <cmath>
#include <numeric>

#include "test_support.hpp"

namespace bb = bayesbounds;
using bb::ErrorCode;

TEST(ValidateJoint, AcceptsTwoByTwo) {
  const auto model = bb::validate_joint({{0.4, 0.1}, {0.1, 0.4}});
  EXPECT_EQ(model.k(), 2u);
  EXPECT_EQ(model.n(), 2u);
  EXPECT_DOUBLE_EQ(model(0, 0), 0.4);
  EXPECT_DOUBLE_EQ(model(1, 0), 0.1);
}

TEST(ValidateJoint, RejectsSingleClass) {
  EXPECT_BB_ERROR(bb::validate_joint({{1.0}}), ErrorCode::kTooFewClasses);
}

TEST(ValidateJoint, RejectsWrongMass) {
  EXPECT_BB_ERROR(bb::validate_joint({{0.6, 0.6}, {0.0, 0.0}}), ErrorCode::kMassNotOne);
  EXPECT_BB_ERROR(bb::validate_joint({{0.0, 0.0}, {0.0, 0.0}}), ErrorCode::kMassNotOne);
}

TEST(ValidateJoint, AllowAnyMassRescales) {
  const auto model = bb::validate_joint({{0.6, 0.6}, {0.0, 0.0}}, {.allow_any_mass = true});
  EXPECT_DOUBLE_EQ(model(0, 0), 0.5);
}

TEST(ValidateJoint, RejectsBadEntries) {
  EXPECT_BB_ERROR(bb::validate_joint({{1.1, -0.1}, {0.0, 0.0}}), ErrorCode::kNegativeEntry);
  EXPECT_BB_ERROR(bb::validate_joint({{NAN, 0.5}, {0.0, 0.5}}), ErrorCode::kNonFinite);
  EXPECT_BB_ERROR(bb::validate_joint({{0.5, 0.0}, {0.5}}), ErrorCode::kBadShape);
  EXPECT_BB_ERROR(bb::validate_joint({}), ErrorCode::kBadShape);
}

TEST(ValidateJoint, RenormalizesWithinTolerance) {
  const auto model = bb::validate_joint({{0.4 + 4e-10, 0.1}, {0.1, 0.4}});
  const auto mu = bb::marginal(model);
  EXPECT_NEAR(mu[0] + mu[1], 1.0, 1e-15);
  EXPECT_BB_ERROR(bb::validate_joint({{0.4 + 2e-9, 0.1}, {0.1, 0.4}}), ErrorCode::kMassNotOne);
}

TEST(ValidateJoint, IdempotentOnRandomModels) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto model = bbtest::random_joint(rng, 2 + trial % 6, 1 + trial % 5);
    EXPECT_EQ(bb::validate_joint(model.to_rows()), model);
  }
}

TEST(Marginal, ColumnSums) {
  const auto mu = bb::marginal(bb::validate_joint({{0.4, 0.1}, {0.1, 0.4}}));
  EXPECT_DOUBLE_EQ(mu[0], 0.5);
  EXPECT_DOUBLE_EQ(mu[1], 0.5);

  const auto single = bb::marginal(bb::validate_joint({{1.0, 0.0}, {0.0, 0.0}}));
  EXPECT_EQ(single, (std::vector<double>{1.0, 0.0}));
}

TEST(Marginal, IdenticalRowsGiveUniform) {
  const std::size_t k = 4, n = 5;
  const auto model = bb::validate_joint(
      std::vector<std::vector<double>>(k, std::vector<double>(n, 1.0 / (k * n))));
  for (double m : bb::marginal(model)) EXPECT_NEAR(m, 1.0 / n, 1e-15);
}

TEST(Posterior, Examples) {
  const auto model = bb::validate_joint({{0.4, 0.1}, {0.1, 0.4}});
  const auto rho = bb::posterior(model, 0);
  EXPECT_DOUBLE_EQ(rho[0], 0.8);
  EXPECT_DOUBLE_EQ(rho[1], 0.2);

  const auto uniform = bb::validate_joint({{0.25, 0.125}, {0.25, 0.125}, {0.25, 0.125}},
                                          {.allow_any_mass = true});
  const auto flat = bb::posterior(uniform, 1);
  for (double v : flat.values()) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
}

TEST(Posterior, ZeroMarginalRefused) {
  const auto model = bb::validate_joint({{0.5, 0.0}, {0.5, 0.0}});
  EXPECT_BB_ERROR(bb::posterior(model, 1), ErrorCode::kZeroMarginal);
}

TEST(Posterior, SumsToOneOnRandomModels) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto model = bbtest::random_joint(rng, 2 + trial % 7, 1 + trial % 6);
    const auto mu = bb::marginal(model);
    EXPECT_NEAR(std::accumulate(mu.begin(), mu.end(), 0.0), 1.0, 1e-12);
    for (std::size_t x = 0; x < model.n(); ++x) {
      const auto rho = bb::posterior(model, x);
      EXPECT_NEAR(std::accumulate(rho.values().begin(), rho.values().end(), 0.0), 1.0, 1e-12);
    }
  }
}

TEST(PosteriorProfile, Validation) {
  EXPECT_BB_ERROR(bb::PosteriorProfile({1.0}), ErrorCode::kTooFewClasses);
  EXPECT_BB_ERROR(bb::PosteriorProfile({0.7, 0.7}), ErrorCode::kMassNotOne);
  EXPECT_BB_ERROR(bb::PosteriorProfile({1.5, -0.5}), ErrorCode::kNegativeEntry);
  EXPECT_DOUBLE_EQ(bb::PosteriorProfile({0.25, 0.75}).max(), 0.75);
}
