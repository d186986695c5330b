#include "bayesbounds/model_io.hpp"

#include <filesystem>
#include <fstream>

#include "test_support.hpp"

namespace bb = bayesbounds;
using bb::ErrorCode;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::path(BAYESBOUNDS_TMP_DIR) / name;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST(ModelIo, ParsesCsv) {
  const auto model = bb::parse_model_csv("0.4,0.1\n0.1,0.4");
  EXPECT_EQ(model, bb::validate_joint({{0.4, 0.1}, {0.1, 0.4}}));
}

TEST(ModelIo, CsvHeaderAndWhitespace) {
  const auto model = bb::parse_model_csv("# joint law\n 0.4 , 0.1\r\n0.1,0.4\n\n");
  EXPECT_EQ(model.k(), 2u);
  EXPECT_DOUBLE_EQ(model(1, 1), 0.4);
}

TEST(ModelIo, CsvErrorsCarryLocation) {
  EXPECT_BB_ERROR(bb::parse_model_csv(""), ErrorCode::kParseError);
  EXPECT_BB_ERROR(bb::parse_model_csv("# only a header\n"), ErrorCode::kParseError);
  try {
    bb::parse_model_csv("0.4,0.1\n0.1,abc\n");
    FAIL() << "expected a parse error";
  } catch (const bb::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 2, column 2"), std::string::npos) << e.what();
  }
  EXPECT_BB_ERROR(bb::parse_model_csv("0.4,0.1\n0.5\n"), ErrorCode::kParseError);
  EXPECT_BB_ERROR(bb::parse_model_csv("0.4,,0.1\n0.1,0,0.4\n"), ErrorCode::kParseError);
  // Parsed but invalid models surface the validation error.
  EXPECT_BB_ERROR(bb::parse_model_csv("0.6,0.6\n0,0\n"), ErrorCode::kMassNotOne);
}

TEST(ModelIo, ParsesJson) {
  const auto model = bb::parse_model_json(R"({"k":2,"n":2,"w":[[0.4,0.1],[0.1,0.4]]})");
  EXPECT_EQ(model, bb::validate_joint({{0.4, 0.1}, {0.1, 0.4}}));
  EXPECT_BB_ERROR(bb::parse_model_json(R"({"k":3,"n":2,"w":[[0.4,0.1],[0.1,0.4]]})"),
                  ErrorCode::kParseError);
  EXPECT_BB_ERROR(bb::parse_model_json(R"({"w":[[0.4,"x"],[0.1,0.4]]})"), ErrorCode::kParseError);
  EXPECT_BB_ERROR(bb::parse_model_json("{"), ErrorCode::kParseError);
}

TEST(ModelIo, FormatDoubleRoundTrips) {
  EXPECT_EQ(bb::format_double(0.4), "0.4");
  EXPECT_EQ(bb::format_double(1.0 / 3.0), "0.3333333333333333");
}

TEST(ModelIo, SaveLoadRoundTripProperty) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto model = bbtest::random_joint(rng, 2 + trial % 5, 1 + trial % 4);
    for (const char* name : {"rt.csv", "rt.json"}) {
      const auto path = temp_path(name);
      bb::save_model(model, path);
      const auto loaded = bb::load_model(path);
      EXPECT_EQ(loaded, model);
      bb::save_model(loaded, path);
      EXPECT_EQ(bb::load_model(path), loaded);
    }
  }
}

TEST(ModelIo, ExplicitFormatOverridesExtension) {
  const auto path = temp_path("model.txt");
  write_text(path, R"({"w":[[0.5],[0.5]]})");
  EXPECT_EQ(bb::load_model(path, bb::ModelFormat::kJson).n(), 1u);
}

TEST(ModelIo, MissingFileIsIoError) {
  EXPECT_BB_ERROR(bb::load_model(temp_path("does_not_exist.csv")), ErrorCode::kIoError);
  EXPECT_BB_ERROR(bb::save_model(bb::validate_joint({{0.5}, {0.5}}), "/nonexistent_dir/x.csv"),
                  ErrorCode::kIoError);
}
