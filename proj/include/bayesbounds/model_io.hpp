#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bayesbounds/joint_model.hpp"

namespace bayesbounds {

enum class ModelFormat { kAuto, kCsv, kJson };

// CSV: k lines of n comma-separated decimals; lines starting with '#' and
// blank lines are skipped. JSON: {"k": k, "n": n, "w": [[...], ...]}.
// Parse failures throw kParseError with a line/column location.
JointModel parse_model_csv(std::string_view text, const ValidateOptions& options = {});
JointModel parse_model_json(std::string_view text, const ValidateOptions& options = {});

// Shortest decimal text that reads back to the identical double.
std::string format_double(double value);

std::string model_to_csv(const JointModel& model);
std::string model_to_json(const JointModel& model);

// kAuto picks JSON for a ".json" extension and CSV otherwise.
JointModel load_model(const std::filesystem::path& path, ModelFormat format = ModelFormat::kAuto,
                      const ValidateOptions& options = {});
void save_model(const JointModel& model, const std::filesystem::path& path,
                ModelFormat format = ModelFormat::kAuto);

}  // namespace bayesbounds
