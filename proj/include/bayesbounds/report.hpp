#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "bayesbounds/entropy_bounds.hpp"
#include "bayesbounds/joint_model.hpp"

namespace bayesbounds {

// Empty cells (std::monostate) render as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  std::size_t column(const std::string& name) const;  // throws kBadParam if absent
  double number(std::size_t row, const std::string& name) const;

  std::string to_csv() const;
  std::string to_json() const;  // array of row objects
};

enum class OutputFormat { kCsv, kJson };
std::string render(const Table& table, OutputFormat format);

inline constexpr double kSandwichSlack = 1e-11;

// All bound values for one model.
struct BoundsReport {
  std::size_t k = 0;
  double delta = 0.0;
  double entropy_nats = 0.0;
  double p_star = 0.0;
  double lower = 0.0;        // L(Delta)
  double upper = 0.0;        // U(Delta)
  double upper_simpl = 0.0;  // Usimpl(Delta)
  double lower_fm = 0.0;     // L_FM(H)
  double upper_fm = 0.0;     // U_FM(H)
  std::vector<RenyiValue> renyi;

  // Smallest slack across L <= p* <= U <= Usimpl and L_FM <= p* <= U_FM.
  double min_slack() const;
  // Throws kCheckFailed when min_slack() < -kSandwichSlack.
  void check_sandwich() const;
};

// Evaluates every bound and asserts both sandwich chains.
BoundsReport evaluate(const JointModel& model, const std::vector<double>& renyi_betas = {});
// Same, on the single-observation pure model built from the profile.
BoundsReport evaluate(const PosteriorProfile& profile);

// Report columns: k, delta, entropy_nats, p_star, L, U, U_simpl, L_FM, U_FM,
// then log10 of the five bounds and of p_star (empty when not positive).
std::vector<std::string> report_columns();
void append_report(std::vector<Cell>& row, const BoundsReport& report);

Cell log10_cell(double value);

}  // namespace bayesbounds
