#include "bayesbounds/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bayesbounds/delta_bounds.hpp"
#include "bayesbounds/entropy_bounds.hpp"
#include "bayesbounds/error.hpp"
#include "bayesbounds/families.hpp"

namespace bayesbounds {

std::vector<double> step_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) {
    throw Error(ErrorCode::kBadParam, "bad grid [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "] step " + std::to_string(step));
  }
  const double span = (hi - lo) / step;
  auto intervals = static_cast<std::size_t>(std::floor(span + 1e-9));
  std::vector<double> grid;
  grid.reserve(intervals + 2);
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid.push_back(std::min(hi, lo + static_cast<double>(i) * step));
  }
  if (hi - grid.back() > 1e-9 * step) {
    grid.push_back(hi);
  } else {
    grid.back() = hi;
  }
  return grid;
}

Table fig1_table(std::size_t k, double delta_step) {
  if (k < 2) throw Error(ErrorCode::kTooFewClasses, "k = " + std::to_string(k));
  Table t;
  t.header = {"delta", "L", "U", "U_simpl"};
  for (double d : step_grid(0.0, static_cast<double>(k - 1), delta_step)) {
    t.rows.push_back({d, delta_lower_bound(k, d), delta_upper_bound(k, d),
                      delta_upper_bound_simpl(k, d)});
  }
  return t;
}

Table fig2_table(const std::vector<double>& p_stars, std::size_t eps_points) {
  if (eps_points == 0) throw Error(ErrorCode::kBadParam, "need at least one eps point");
  Table t;
  t.header = {"p", "eps", "a1", "a2", "a3"};
  for (auto& c : report_columns()) t.header.push_back(c);
  for (double p : p_stars) {
    if (!(p >= 0.0 && p <= 2.0 / 3.0 + 1e-12)) {
      throw Error(ErrorCode::kOutOfDomain, "p = " + std::to_string(p) + " outside [0, 2/3]");
    }
    const double lo = std::max(0.0, 2.0 * p - 1.0);
    const double hi = std::max(lo, p / 2.0);
    const std::size_t points = hi - lo > 1e-12 ? eps_points : 1;
    for (std::size_t i = 0; i < points; ++i) {
      const double eps =
          points == 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
      const PosteriorProfile a = three_class_profile(p, eps);
      std::vector<Cell> row{p, eps, a[0], a[1], a[2]};
      append_report(row, evaluate(a));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table fig3_table(const std::vector<std::string>& models, const std::vector<std::size_t>& ks,
                 double q_step) {
  Table t;
  t.header = {"model", "q", "a_max"};
  for (auto& c : report_columns()) t.header.push_back(c);
  const std::vector<double> qs = step_grid(q_step, 0.5, q_step);
  for (const auto& model : models) {
    const Family family = parse_family(model);
    if (family != Family::kBinomial && family != Family::kExponential) {
      throw Error(ErrorCode::kBadParam, "fig3 supports binomial and exponential, not " + model);
    }
    for (std::size_t k : ks) {
      unsigned m = 0;
      if (family == Family::kBinomial) {
        while ((std::size_t{1} << m) < k && m < 63) ++m;
        if (k < 2 || (std::size_t{1} << m) != k) {
          throw Error(ErrorCode::kBadParam, "binomial model needs k = 2^m, got " + std::to_string(k));
        }
      }
      for (double q : qs) {
        const PosteriorProfile a =
            family == Family::kBinomial ? binomial_profile(m, q) : exponential_profile(k, q);
        const BoundsReport r = evaluate(a);
        if (k == 2) {
          for (double v : {r.lower, r.upper, r.lower_fm}) {
            if (std::abs(v - r.p_star) > kSandwichSlack) {
              throw Error(ErrorCode::kCheckFailed, "k = 2 identity fails at q = " + std::to_string(q));
            }
          }
        }
        std::vector<Cell> row{model, q, a.max()};
        append_report(row, r);
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

double comp_lo_gap(std::size_t k, std::size_t ell) {
  if (k < 2 || ell < 1 || ell > k) {
    throw Error(ErrorCode::kBadParam, "need 1 <= ell <= k");
  }
  return phi(k, static_cast<double>(ell - 1) / static_cast<double>(k)) -
         std::log(static_cast<double>(ell));
}

double comp_lo_scaled_limit() { return 6.0 - 8.0 * std::numbers::ln2; }

Table compare_lo_table(std::size_t k_min, std::size_t k_max) {
  if (k_min < 3 || k_max < k_min) {
    throw Error(ErrorCode::kBadParam, "need 3 <= k_min <= k_max");
  }
  Table t;
  t.header = {"k", "ell", "d", "k_times_d", "k_times_d_limit", "delta", "entropy_nats", "L", "L_FM"};
  for (std::size_t k = k_min; k <= k_max; ++k) {
    for (std::size_t gap = 4; gap >= 1; --gap) {
      if (gap > k) continue;
      const std::size_t ell = k - gap;
      if (!comp_lo_in_domain(k, ell)) continue;
      const double d = comp_lo_gap(k, ell);
      if (!(d > 0.0)) {
        throw Error(ErrorCode::kCheckFailed, "d_k(ell) <= 0 at k = " + std::to_string(k) +
                                                 ", ell = " + std::to_string(ell));
      }
      const PosteriorProfile a = comp_lo_profile(k, ell).profile;
      const double delta = delta_of_profile(a).value;
      const double h = entropy_of_profile(a).nats;
      std::vector<Cell> row{static_cast<long long>(k), static_cast<long long>(ell), d};
      if (gap == 3) {
        row.emplace_back(static_cast<double>(k) * d);
        row.emplace_back(comp_lo_scaled_limit());
      } else {
        row.emplace_back(std::monostate{});
        row.emplace_back(std::monostate{});
      }
      for (double v : {delta, h, delta_lower_bound(k, delta), fm_lower_bound(k, h)}) {
        row.emplace_back(v);
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

CompareHiResult compare_hi_scan(double nu, std::size_t k_max) {
  if (!(nu > 1.0) || !std::isfinite(nu) ||
      static_cast<double>(k_max) < std::ceil(nu) + 1.0) {
    throw Error(ErrorCode::kBadParam, "need nu > 1 and k_max >= ceil(nu) + 1");
  }
  CompareHiResult result;
  result.table.header = {"k", "delta", "entropy_nats", "p_star", "U", "U_simpl", "U_FM",
                         "u_exceeds_ufm"};
  result.min_upper = 1.0;
  for (auto k = static_cast<std::size_t>(std::floor(nu)) + 1; k <= k_max; ++k) {
    const PosteriorProfile a = comp_hi_profile(k, nu);
    const double delta = delta_of_profile(a).value;
    const double h = entropy_of_profile(a).nats;
    const double p_star = 1.0 - a.max();
    const double u = delta_upper_bound(k, delta);
    const double u_fm = fm_upper_bound(h);
    const bool exceeds = u > u_fm;
    if (exceeds && !result.crossover_k) result.crossover_k = k;
    result.min_upper = std::min(result.min_upper, u);
    result.last_upper_fm = u_fm;
    result.table.rows.push_back({static_cast<long long>(k), delta, h, p_star, u,
                                 delta_upper_bound_simpl(k, delta), u_fm,
                                 static_cast<long long>(exceeds)});
  }
  return result;
}

}  // namespace bayesbounds
