#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bayesbounds/report.hpp"

namespace bayesbounds {

// Evenly spaced grid from lo to hi inclusive with the given step; the last
// point is hi exactly. Points are lo + i * step, not accumulated.
std::vector<double> step_grid(double lo, double hi, double step);

// Columns delta, L, U, U_simpl over delta in [0, k - 1].
Table fig1_table(std::size_t k, double delta_step = 0.01);

inline const std::vector<double> kFig2PStars = {0.01, 0.1, 0.3, 0.5, 0.6, 0.64};

// Three-class pure models (1-p, p-eps, eps), eps on `eps_points` evenly
// spaced values of [max(0, 2p-1), p/2] (one point when the range is empty).
// Columns p, eps, a1, a2, a3 followed by report_columns().
Table fig2_table(const std::vector<double>& p_stars = kFig2PStars, std::size_t eps_points = 201);

// Binomial and/or exponential pure models over q in (0, 1/2] with the given
// step. Columns model, q, a_max followed by report_columns(). Binomial needs
// k a power of two (kBadParam otherwise). For k = 2 the L, U and L_FM columns
// are asserted equal to p_star within 1e-11 before emission.
Table fig3_table(const std::vector<std::string>& models = {"binomial", "exponential"},
                 const std::vector<std::size_t>& ks = {2, 4, 8}, double q_step = 0.005);

// d_k(ell) = Phi((ell - 1)/k) - ln ell; positive exactly when the Delta lower
// bound beats the entropy lower bound on the comp-lo profile.
double comp_lo_gap(std::size_t k, std::size_t ell);

// Limit of k * d_k(k - 3) as k grows: 6 - 8 ln 2.
double comp_lo_scaled_limit();

// For k in [k_min, k_max] and every in-domain ell: columns k, ell, d,
// k_times_d and k_times_d_limit (ell = k - 3 rows only), delta,
// entropy_nats, L, L_FM. d > 0 is asserted before emission.
Table compare_lo_table(std::size_t k_min, std::size_t k_max);

struct CompareHiResult {
  Table table;  // k, delta, entropy_nats, p_star, U, U_simpl, U_FM, u_exceeds_ufm
  std::optional<std::size_t> crossover_k;  // smallest k with U(Delta) > U_FM(H)
  double min_upper = 0.0;                  // min over rows of U(Delta)
  double last_upper_fm = 0.0;              // U_FM(H) at k_max
};

// Scans comp_hi_profile(k, nu) for floor(nu) + 1 <= k <= k_max.
// Requires nu > 1 and k_max >= ceil(nu) + 1, else kBadParam.
CompareHiResult compare_hi_scan(double nu, std::size_t k_max);

}  // namespace bayesbounds
