#include "bayesbounds/report.hpp"

#include <algorithm>
#include <cmath>

#include "bayesbounds/bayes.hpp"
#include "bayesbounds/delta_bounds.hpp"
#include "bayesbounds/error.hpp"
#include "bayesbounds/families.hpp"
#include "bayesbounds/model_io.hpp"
#include "json.hpp"

namespace bayesbounds {

namespace {

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error(ErrorCode::kBadParam, "no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

double Table::number(std::size_t row, const std::string& name) const {
  const Cell& cell = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<long long>(&cell)) return static_cast<double>(*i);
  return std::nan("");
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c > 0) out += ',';
    out += header[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += csv_cell(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string Table::to_json() const {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < header.size(); ++c) {
      obj[header[c]] = json_cell(row[c]);
    }
    doc.push_back(std::move(obj));
  }
  return doc.dump() + "\n";
}

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::kJson ? table.to_json() : table.to_csv();
}

double BoundsReport::min_slack() const {
  return std::min({p_star - lower, upper - p_star, upper_simpl - upper, p_star - lower_fm,
                   upper_fm - p_star});
}

void BoundsReport::check_sandwich() const {
  if (min_slack() < -kSandwichSlack) {
    throw Error(ErrorCode::kCheckFailed,
                "bound chain violated: L=" + format_double(lower) + " p*=" + format_double(p_star) +
                    " U=" + format_double(upper) + " Usimpl=" + format_double(upper_simpl) +
                    " L_FM=" + format_double(lower_fm) + " U_FM=" + format_double(upper_fm));
  }
}

BoundsReport evaluate(const JointModel& model, const std::vector<double>& renyi_betas) {
  BoundsReport r;
  r.k = model.k();
  r.delta = delta(model).value;
  r.entropy_nats = conditional_entropy(model).nats;
  r.p_star = bayes_error(model);
  r.lower = delta_lower_bound(r.k, r.delta);
  r.upper = delta_upper_bound(r.k, r.delta);
  r.upper_simpl = delta_upper_bound_simpl(r.k, r.delta);
  r.lower_fm = fm_lower_bound(r.k, r.entropy_nats);
  r.upper_fm = fm_upper_bound(r.entropy_nats);
  for (double beta : renyi_betas) r.renyi.push_back(renyi_conditional_entropy(model, beta));
  r.check_sandwich();
  return r;
}

BoundsReport evaluate(const PosteriorProfile& profile) { return evaluate(pure_model(profile)); }

Cell log10_cell(double value) {
  if (!(value > 0.0)) return std::monostate{};
  return std::log10(value);
}

std::vector<std::string> report_columns() {
  return {"k",           "delta",      "entropy_nats",  "p_star",    "L",
          "U",           "U_simpl",    "L_FM",          "U_FM",      "log10_L",
          "log10_U",     "log10_U_simpl", "log10_L_FM", "log10_U_FM", "log10_p_star"};
}

void append_report(std::vector<Cell>& row, const BoundsReport& r) {
  row.emplace_back(static_cast<long long>(r.k));
  for (double v : {r.delta, r.entropy_nats, r.p_star, r.lower, r.upper, r.upper_simpl,
                   r.lower_fm, r.upper_fm}) {
    row.emplace_back(v);
  }
  for (double v : {r.lower, r.upper, r.upper_simpl, r.lower_fm, r.upper_fm, r.p_star}) {
    row.push_back(log10_cell(v));
  }
}

}  // namespace bayesbounds
