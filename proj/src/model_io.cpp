#include "bayesbounds/model_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "bayesbounds/error.hpp"
#include "json.hpp"

namespace bayesbounds {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string location(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double parse_field(std::string_view field, std::size_t line, std::size_t column) {
  field = trim(field);
  if (field.empty()) {
    throw Error(ErrorCode::kParseError, "empty field at " + location(line, column));
  }
  // from_chars rejects a leading '+'.
  if (field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw Error(ErrorCode::kParseError,
                "not a number '" + std::string(field) + "' at " + location(line, column));
  }
  return value;
}

ModelFormat resolve(const std::filesystem::path& path, ModelFormat format) {
  if (format != ModelFormat::kAuto) return format;
  return path.extension() == ".json" ? ModelFormat::kJson : ModelFormat::kCsv;
}

}  // namespace

JointModel parse_model_csv(std::string_view text, const ValidateOptions& options) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::vector<double> row;
    std::size_t column = 1;
    while (true) {
      const auto comma = line.find(',');
      row.push_back(parse_field(line.substr(0, comma), line_no, column));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
      ++column;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::kParseError, "expected " + std::to_string(rows.front().size()) +
                                              " columns, found " + std::to_string(row.size()) +
                                              " at " + location(line_no, 1));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::kParseError, "no data rows");
  }
  return validate_joint(rows, options);
}

JointModel parse_model_json(std::string_view text, const ValidateOptions& options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("w") || !doc["w"].is_array()) {
    throw Error(ErrorCode::kParseError, "expected an object with array field \"w\"");
  }
  std::vector<std::vector<double>> rows;
  std::size_t y = 0;
  for (const auto& json_row : doc["w"]) {
    ++y;
    if (!json_row.is_array()) {
      throw Error(ErrorCode::kParseError, "w row " + std::to_string(y) + " is not an array");
    }
    std::vector<double> row;
    std::size_t x = 0;
    for (const auto& cell : json_row) {
      ++x;
      if (!cell.is_number()) {
        throw Error(ErrorCode::kParseError, "w[" + std::to_string(y) + "][" +
                                                std::to_string(x) + "] is not a number");
      }
      row.push_back(cell.get<double>());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::kParseError, "\"w\" is empty");
  }
  for (const char* key : {"k", "n"}) {
    if (doc.contains(key) && !doc[key].is_number_integer()) {
      throw Error(ErrorCode::kParseError, std::string("\"") + key + "\" must be an integer");
    }
  }
  if (doc.contains("k") && doc["k"].get<long long>() != static_cast<long long>(rows.size())) {
    throw Error(ErrorCode::kParseError, "\"k\" does not match the number of rows of \"w\"");
  }
  if (doc.contains("n")) {
    const auto n = doc["n"].get<long long>();
    for (const auto& row : rows) {
      if (static_cast<long long>(row.size()) != n) {
        throw Error(ErrorCode::kParseError, "\"n\" does not match the row length of \"w\"");
      }
    }
  }
  return validate_joint(rows, options);
}

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

std::string model_to_csv(const JointModel& model) {
  std::string out;
  for (std::size_t y = 0; y < model.k(); ++y) {
    for (std::size_t x = 0; x < model.n(); ++x) {
      if (x > 0) out += ',';
      out += format_double(model(y, x));
    }
    out += '\n';
  }
  return out;
}

std::string model_to_json(const JointModel& model) {
  nlohmann::json doc;
  doc["k"] = model.k();
  doc["n"] = model.n();
  doc["w"] = model.to_rows();
  return doc.dump() + "\n";
}

JointModel load_model(const std::filesystem::path& path, ModelFormat format,
                      const ValidateOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return resolve(path, format) == ModelFormat::kJson ? parse_model_json(text, options)
                                                     : parse_model_csv(text, options);
}

void save_model(const JointModel& model, const std::filesystem::path& path, ModelFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  out << (resolve(path, format) == ModelFormat::kJson ? model_to_json(model)
                                                      : model_to_csv(model));
  if (!out) {
    throw Error(ErrorCode::kIoError, "write failed for " + path.string());
  }
}

}  // namespace bayesbounds
