#include "bayesbounds/report.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "bayesbounds/families.hpp"
#include "test_support.hpp"

namespace bb = bayesbounds;
using bb::ErrorCode;

TEST(Evaluate, TwoClassExample) {
  const auto r = bb::evaluate(bb::validate_joint({{0.4, 0.1}, {0.1, 0.4}}), {0.5, 2.0});
  EXPECT_EQ(r.k, 2u);
  EXPECT_NEAR(r.delta, 0.6, 1e-15);
  EXPECT_NEAR(r.p_star, 0.2, 1e-15);
  EXPECT_NEAR(r.lower, 0.2, 1e-15);
  EXPECT_NEAR(r.upper, 0.2, 1e-15);
  EXPECT_NEAR(r.upper_simpl, 2.0 / 7, 1e-15);
  EXPECT_NEAR(r.lower_fm, 0.2, 1e-13);
  EXPECT_NEAR(r.upper_fm, 0.36096404744368116, 1e-14);
  ASSERT_EQ(r.renyi.size(), 2u);
  EXPECT_NEAR(r.renyi[0].bits, 0.8479969065549501, 1e-14);
  EXPECT_NEAR(r.min_slack(), 0.0, 1e-13);
}

TEST(Evaluate, UniformAndSeparated) {
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto u = bb::evaluate(bb::PosteriorProfile(std::vector<double>(k, 1.0 / k)));
    const double top = 1.0 - 1.0 / k;
    for (double v : {u.p_star, u.lower, u.upper, u.upper_simpl, u.upper_fm}) {
      EXPECT_NEAR(v, top, 1e-12);
    }
    // phi is flat at its maximum, so its inverse there is only good to ~sqrt(eps).
    EXPECT_NEAR(u.lower_fm, top, 1e-7);
    EXPECT_LE(u.lower_fm, u.p_star);
    std::vector<double> a(k, 0.0);
    a[0] = 1.0;
    const auto s = bb::evaluate(bb::PosteriorProfile(a));
    for (double v : {s.p_star, s.lower, s.upper, s.upper_simpl, s.lower_fm, s.upper_fm}) {
      EXPECT_NEAR(v, 0.0, 1e-15);
    }
  }
}

TEST(Evaluate, CheckSandwichThrowsOnViolation) {
  bb::BoundsReport r;
  r.p_star = 0.3;
  r.lower = 0.4;
  r.upper = r.upper_simpl = r.upper_fm = 0.5;
  EXPECT_BB_ERROR(r.check_sandwich(), ErrorCode::kCheckFailed);
  r.lower = 0.3 + 5e-12;
  EXPECT_NO_THROW(r.check_sandwich());
}

TEST(Table, CsvAndJson) {
  bb::Table t;
  t.header = {"name", "x", "n", "blank"};
  t.rows.push_back({std::string("a"), 0.25, 3LL, std::monostate{}});
  EXPECT_EQ(t.to_csv(), "name,x,n,blank\na,0.25,3,\n");
  const auto doc = nlohmann::ordered_json::parse(t.to_json());
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["name"], "a");
  EXPECT_EQ(doc[0]["x"], 0.25);
  EXPECT_EQ(doc[0]["n"], 3);
  EXPECT_TRUE(doc[0]["blank"].is_null());
  EXPECT_EQ(doc[0].begin().key(), "name");
  EXPECT_EQ(t.number(0, "x"), 0.25);
  EXPECT_EQ(t.number(0, "n"), 3.0);
  EXPECT_BB_ERROR(t.column("missing"), ErrorCode::kBadParam);
  EXPECT_EQ(bb::render(t, bb::OutputFormat::kCsv), t.to_csv());
}

TEST(Table, ReportRowLayout) {
  std::vector<bb::Cell> row;
  bb::append_report(row, bb::evaluate(bb::PosteriorProfile({1.0, 0.0})));
  ASSERT_EQ(row.size(), bb::report_columns().size());
  EXPECT_EQ(bb::report_columns().front(), "k");
  // log10 of a zero bound is an empty cell.
  EXPECT_TRUE(std::holds_alternative<std::monostate>(row.back()));
  EXPECT_TRUE(std::holds_alternative<std::monostate>(bb::log10_cell(0.0)));
  EXPECT_DOUBLE_EQ(std::get<double>(bb::log10_cell(0.01)), -2.0);
}
