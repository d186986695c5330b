#include "bayesbounds/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "bayesbounds/error.hpp"
#include "json.hpp"

namespace bayesbounds {

namespace {

constexpr double kDomainSlack = 1e-12;

PosteriorProfile descending(std::vector<double> a) {
  std::sort(a.begin(), a.end(), std::greater<>());
  return PosteriorProfile(std::move(a));
}

void require_open_unit(double q, const char* name) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorCode::kBadParam, std::string(name) + " = " + std::to_string(q) +
                                          " must lie in (0, 1)");
  }
}

template <typename T>
T required(const std::optional<T>& value, const char* name, Family family) {
  if (!value) {
    throw Error(ErrorCode::kBadParam, std::string(to_string(family)) + " needs \"" + name + "\"");
  }
  return *value;
}

}  // namespace

JointModel pure_model(const PosteriorProfile& a, const std::vector<double>& weights,
                      const std::vector<std::vector<std::size_t>>& perms) {
  const std::size_t k = a.k();
  const std::size_t n = weights.size();
  if (n == 0) throw Error(ErrorCode::kBadWeights, "no observations");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kBadWeights, "weight " + std::to_string(w));
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kBadWeights, "weights sum to " + std::to_string(total));
  }
  if (perms.size() != n) {
    throw Error(ErrorCode::kBadPermutation, std::to_string(perms.size()) +
                                                " permutations for " + std::to_string(n) +
                                                " observations");
  }
  std::vector<std::vector<double>> rows(k, std::vector<double>(n, 0.0));
  for (std::size_t x = 0; x < n; ++x) {
    const auto& perm = perms[x];
    std::vector<bool> seen(k, false);
    if (perm.size() != k) {
      throw Error(ErrorCode::kBadPermutation, "permutation " + std::to_string(x) + " has length " +
                                                  std::to_string(perm.size()));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (perm[i] >= k || seen[perm[i]]) {
        throw Error(ErrorCode::kBadPermutation,
                    "permutation " + std::to_string(x) + " is not a bijection");
      }
      seen[perm[i]] = true;
      rows[perm[i]][x] = weights[x] * a[i];
    }
  }
  return validate_joint(rows);
}

JointModel pure_model(const PosteriorProfile& a) {
  std::vector<std::size_t> identity(a.k());
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  return pure_model(a, {1.0}, {identity});
}

PosteriorProfile binomial_profile(unsigned m, double q) {
  if (m < 1 || m > 20) {
    throw Error(ErrorCode::kBadParam, "m = " + std::to_string(m) + " must lie in [1, 20]");
  }
  require_open_unit(q, "q");
  std::vector<double> a;
  a.reserve(std::size_t{1} << m);
  double multiplicity = 1.0;  // C(m, j)
  for (unsigned j = 0; j <= m; ++j) {
    const double value = std::pow(1.0 - q, j) * std::pow(q, m - j);
    a.insert(a.end(), static_cast<std::size_t>(multiplicity), value);
    multiplicity = multiplicity * (m - j) / (j + 1);
  }
  return descending(std::move(a));
}

PosteriorProfile exponential_profile(std::size_t k, double q) {
  if (k < 2) throw Error(ErrorCode::kBadParam, "k = " + std::to_string(k));
  require_open_unit(q, "q");
  const double kd = static_cast<double>(k);
  std::vector<double> a(k);
  for (std::size_t i = 0; i < k; ++i) {
    a[i] = std::pow(1.0 - q, static_cast<double>(i)) * std::pow(q, kd - 1.0 - static_cast<double>(i));
  }
  double c = 0.0;
  if (q == 0.5) {
    c = kd * std::pow(2.0, 1.0 - kd);
  } else if (std::abs(1.0 - 2.0 * q) < 1e-3) {
    // The closed form cancels badly this close to q = 1/2.
    c = std::accumulate(a.begin(), a.end(), 0.0);
  } else {
    c = (std::pow(1.0 - q, kd) - std::pow(q, kd)) / (1.0 - 2.0 * q);
  }
  for (double& v : a) v /= c;
  return descending(std::move(a));
}

PosteriorProfile three_class_profile(double p, double eps) {
  if (!(p >= -kDomainSlack && p <= 2.0 / 3.0 + kDomainSlack)) {
    throw Error(ErrorCode::kOutOfDomain, "p = " + std::to_string(p) + " outside [0, 2/3]");
  }
  p = std::clamp(p, 0.0, 2.0 / 3.0);
  const double eps_lo = std::max(0.0, 2.0 * p - 1.0);
  const double eps_hi = p / 2.0;
  if (!(eps >= eps_lo - kDomainSlack && eps <= eps_hi + kDomainSlack)) {
    throw Error(ErrorCode::kOutOfDomain, "eps = " + std::to_string(eps) + " outside [" +
                                             std::to_string(eps_lo) + ", " +
                                             std::to_string(eps_hi) + "]");
  }
  eps = std::clamp(eps, eps_lo, eps_hi);
  return PosteriorProfile({1.0 - p, p - eps, eps});
}

bool comp_lo_in_domain(std::size_t k, std::size_t ell) {
  if (k < 3 || ell < 2 || ell >= k) return false;
  const std::size_t gap = k - ell;
  return gap <= 3 || (gap == 4 && k >= 6 && k <= 9);
}

CompLoProfile comp_lo_profile(std::size_t k, std::size_t ell) {
  if (k < 3 || ell < 2 || ell > k) {
    throw Error(ErrorCode::kBadParam, "need k >= 3 and 2 <= ell <= k, got k = " +
                                          std::to_string(k) + ", ell = " + std::to_string(ell));
  }
  std::vector<double> a(k, 0.0);
  std::fill(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ell),
            1.0 / static_cast<double>(ell));
  return {PosteriorProfile(std::move(a)), comp_lo_in_domain(k, ell)};
}

PosteriorProfile comp_hi_profile(std::size_t k, double nu) {
  const double kd = static_cast<double>(k);
  if (!(nu > 1.0) || !std::isfinite(nu) || !(kd > nu) || k < 2) {
    throw Error(ErrorCode::kBadParam, "need nu > 1 and k > nu, got k = " + std::to_string(k) +
                                          ", nu = " + std::to_string(nu));
  }
  std::vector<double> a(k, (nu - 1.0) / (kd * (kd - 1.0)));
  a[0] = 1.0 - (nu - 1.0) / kd;
  return PosteriorProfile(std::move(a));
}

double normal_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double qpsk_q(double eb_n0) {
  if (!(eb_n0 > 0.0) || std::isnan(eb_n0)) {
    throw Error(ErrorCode::kBadParam, "Eb/N0 = " + std::to_string(eb_n0) + " must be positive");
  }
  // Q(sqrt(2 t)) = erfc(sqrt(t)) / 2.
  return 0.5 * std::erfc(std::sqrt(eb_n0));
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kPure: return "pure";
    case Family::kBinomial: return "binomial";
    case Family::kExponential: return "exponential";
    case Family::kThreeClass: return "three_class";
    case Family::kCompLo: return "comp_lo";
    case Family::kCompHi: return "comp_hi";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kPure, Family::kBinomial, Family::kExponential, Family::kThreeClass,
                   Family::kCompLo, Family::kCompHi}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::kBadParam, "unknown family '" + std::string(name) + "'");
}

std::string FamilySpec::to_json() const {
  nlohmann::json doc;
  doc["family"] = std::string(to_string(family));
  if (k) doc["k"] = *k;
  if (m) doc["m"] = *m;
  if (q) doc["q"] = *q;
  if (eb_n0) doc["eb_n0"] = *eb_n0;
  if (p) doc["p"] = *p;
  if (eps) doc["eps"] = *eps;
  if (ell) doc["ell"] = *ell;
  if (nu) doc["nu"] = *nu;
  if (!a.empty()) doc["a"] = a;
  return doc.dump();
}

FamilySpec FamilySpec::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string()) {
    throw Error(ErrorCode::kParseError, "family spec needs a string field \"family\"");
  }
  FamilySpec spec;
  spec.family = parse_family(doc["family"].get<std::string>());
  try {
    if (doc.contains("k")) spec.k = doc["k"].get<std::size_t>();
    if (doc.contains("m")) spec.m = doc["m"].get<unsigned>();
    if (doc.contains("q")) spec.q = doc["q"].get<double>();
    if (doc.contains("eb_n0")) spec.eb_n0 = doc["eb_n0"].get<double>();
    if (doc.contains("p")) spec.p = doc["p"].get<double>();
    if (doc.contains("eps")) spec.eps = doc["eps"].get<double>();
    if (doc.contains("ell")) spec.ell = doc["ell"].get<std::size_t>();
    if (doc.contains("nu")) spec.nu = doc["nu"].get<double>();
    if (doc.contains("a")) spec.a = doc["a"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return spec;
}

PosteriorProfile family_profile(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kPure:
      return PosteriorProfile(spec.a);
    case Family::kBinomial: {
      unsigned m = 0;
      if (spec.m) {
        m = *spec.m;
      } else {
        const std::size_t k = required(spec.k, "k or m", spec.family);
        while ((std::size_t{1} << m) < k && m < 63) ++m;
        if ((std::size_t{1} << m) != k) {
          throw Error(ErrorCode::kBadParam, "binomial k must be a power of two");
        }
      }
      if (spec.k && spec.m && (std::size_t{1} << *spec.m) != *spec.k) {
        throw Error(ErrorCode::kBadParam, "binomial k must equal 2^m");
      }
      if (spec.q && spec.eb_n0) {
        throw Error(ErrorCode::kBadParam, "give either q or eb_n0, not both");
      }
      const double q = spec.eb_n0 ? qpsk_q(*spec.eb_n0) : required(spec.q, "q", spec.family);
      return binomial_profile(m, q);
    }
    case Family::kExponential:
      return exponential_profile(required(spec.k, "k", spec.family),
                                 required(spec.q, "q", spec.family));
    case Family::kThreeClass:
      return three_class_profile(required(spec.p, "p", spec.family),
                                 required(spec.eps, "eps", spec.family));
    case Family::kCompLo:
      return comp_lo_profile(required(spec.k, "k", spec.family),
                             required(spec.ell, "ell", spec.family))
          .profile;
    case Family::kCompHi:
      return comp_hi_profile(required(spec.k, "k", spec.family),
                             required(spec.nu, "nu", spec.family));
  }
  throw Error(ErrorCode::kBadParam, "unknown family");
}

}  // namespace bayesbounds
