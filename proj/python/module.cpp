#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "bayesbounds/bayes.hpp"
#include "bayesbounds/delta_bounds.hpp"
#include "bayesbounds/entropy_bounds.hpp"
#include "bayesbounds/error.hpp"
#include "bayesbounds/families.hpp"
#include "bayesbounds/model_io.hpp"
#include "bayesbounds/report.hpp"
#include "bayesbounds/simplex_oracle.hpp"
#include "bayesbounds/sweeps.hpp"

namespace py = pybind11;
namespace bb = bayesbounds;

namespace {

bb::PosteriorProfile to_profile(const std::vector<double>& a) { return bb::PosteriorProfile(a); }

std::vector<double> from_profile(const bb::PosteriorProfile& a) {
  return {a.values().begin(), a.values().end()};
}

py::list table_rows(const bb::Table& table) {
  py::list rows;
  for (const auto& row : table.rows) {
    py::dict d;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              d[py::str(table.header[c])] = py::none();
            } else {
              d[py::str(table.header[c])] = v;
            }
          },
          row[c]);
    }
    rows.append(std::move(d));
  }
  return rows;
}

py::dict report_dict(const bb::BoundsReport& r) {
  py::dict d;
  d["k"] = r.k;
  d["delta"] = r.delta;
  d["entropy_nats"] = r.entropy_nats;
  d["p_star"] = r.p_star;
  d["L"] = r.lower;
  d["U"] = r.upper;
  d["U_simpl"] = r.upper_simpl;
  d["L_FM"] = r.lower_fm;
  d["U_FM"] = r.upper_fm;
  py::dict renyi;
  for (const auto& v : r.renyi) renyi[py::float_(v.beta)] = v.bits;
  d["renyi_bits"] = renyi;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bayes error and exact bounds for finite classification models";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&m] { return py::exception<bb::Error>(m, "BayesBoundsError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bb::Error& e) {
      const py::object& cls = error_type.get_stored();
      py::object instance = cls(e.what());
      instance.attr("code") = std::string(bb::to_string(e.code()));
      PyErr_SetObject(cls.ptr(), instance.ptr());
    }
  });

  py::class_<bb::JointModel>(m, "JointModel")
      .def(py::init([](const std::vector<std::vector<double>>& w, bool allow_any_mass) {
             return bb::validate_joint(w, {.allow_any_mass = allow_any_mass});
           }),
           py::arg("w"), py::arg("allow_any_mass") = false)
      .def_property_readonly("k", &bb::JointModel::k)
      .def_property_readonly("n", &bb::JointModel::n)
      .def("rows", &bb::JointModel::to_rows)
      .def("__call__", [](const bb::JointModel& model, std::size_t y, std::size_t x) {
        if (y >= model.k() || x >= model.n()) throw py::index_error("index out of range");
        return model(y, x);
      })
      .def("__eq__", [](const bb::JointModel& a, const bb::JointModel& b) { return a == b; })
      .def("__repr__", [](const bb::JointModel& model) {
        return "JointModel(k=" + std::to_string(model.k()) + ", n=" + std::to_string(model.n()) + ")";
      });

  m.def("marginal", &bb::marginal);
  m.def("posterior", [](const bb::JointModel& model, std::size_t x) {
    return from_profile(bb::posterior(model, x));
  });
  m.def("load_model", [](const std::filesystem::path& path) { return bb::load_model(path); });
  m.def("save_model", [](const bb::JointModel& model, const std::filesystem::path& path) {
    bb::save_model(model, path);
  });
  m.def("model_to_csv", &bb::model_to_csv);
  m.def("model_to_json", &bb::model_to_json);

  m.def("classifier_error", &bb::classifier_error);
  m.def("bayes_classifier", &bb::bayes_classifier);
  m.def("bayes_error", &bb::bayes_error);
  m.def("brute_force_bayes_error", &bb::brute_force_bayes_error);

  m.def("delta", [](const bb::JointModel& model) { return bb::delta(model).value; });
  m.def("delta_of_profile", [](const std::vector<double>& a) {
    return bb::delta_of_profile(to_profile(a)).value;
  });
  m.def("lower_bound", &bb::delta_lower_bound, py::arg("k"), py::arg("delta"));
  m.def("upper_bound", &bb::delta_upper_bound, py::arg("k"), py::arg("delta"));
  m.def("upper_bound_simpl", &bb::delta_upper_bound_simpl, py::arg("k"), py::arg("delta"));
  m.def("extremal_low_profile", [](std::size_t k, double d) {
    return from_profile(bb::extremal_low_profile(k, d));
  });
  m.def("extremal_high_profile", [](std::size_t k, double d) {
    return from_profile(bb::extremal_high_profile(k, d));
  });
  m.def("simplex_grid_oracle", [](std::size_t k, std::size_t grid) {
    const bb::OracleReport report = bb::simplex_grid_oracle(k, grid);
    py::dict d;
    d["checked"] = report.checked;
    d["lower_attained"] = report.lower_attained;
    d["upper_attained"] = report.upper_attained;
    d["violations"] = report.violations.size();
    d["json"] = report.to_json();
    return d;
  });

  m.def("conditional_entropy", [](const bb::JointModel& model) {
    return bb::conditional_entropy(model).nats;
  });
  m.def("entropy_of_profile", [](const std::vector<double>& a) {
    return bb::entropy_of_profile(to_profile(a)).nats;
  });
  m.def("phi", &bb::phi, py::arg("k"), py::arg("p"));
  m.def("lower_fm", &bb::fm_lower_bound, py::arg("k"), py::arg("entropy"));
  m.def("upper_fm", &bb::fm_upper_bound, py::arg("entropy"));
  m.def("renyi_conditional_entropy", [](const bb::JointModel& model, double beta) {
    return bb::renyi_conditional_entropy(model, beta).bits;
  });
  m.def("ep_counterexample_check", [] {
    const auto r = bb::renyi_counterexample_check();
    py::dict d;
    d["P_e"] = r.error_probability;
    d["H_beta"] = py::make_tuple(r.renyi_half, r.renyi_two, r.renyi_five);
    d["H_S"] = r.error_entropy_bits;
    d["ep_numerator"] = r.upper_numerator;
    d["bound_false"] = r.bound_false;
    d["passed"] = r.passed();
    return d;
  });

  m.def("pure_model",
        [](const std::vector<double>& a, const std::vector<double>& weights,
           const std::vector<std::vector<std::size_t>>& perms) {
          return bb::pure_model(to_profile(a), weights, perms);
        });
  m.def("binomial_profile", [](unsigned mm, double q) { return from_profile(bb::binomial_profile(mm, q)); });
  m.def("exponential_profile", [](std::size_t k, double q) {
    return from_profile(bb::exponential_profile(k, q));
  });
  m.def("three_class_profile", [](double p, double eps) {
    return from_profile(bb::three_class_profile(p, eps));
  });
  m.def("comp_lo_profile", [](std::size_t k, std::size_t ell) {
    const auto r = bb::comp_lo_profile(k, ell);
    return py::make_tuple(from_profile(r.profile), r.in_proposition_domain);
  });
  m.def("comp_hi_profile", [](std::size_t k, double nu) {
    return from_profile(bb::comp_hi_profile(k, nu));
  });
  m.def("qpsk_q", &bb::qpsk_q, py::arg("eb_n0"));

  m.def("report", [](const bb::JointModel& model, const std::vector<double>& betas) {
    return report_dict(bb::evaluate(model, betas));
  }, py::arg("model"), py::arg("betas") = std::vector<double>{});
  m.def("report_family", [](const std::string& spec_json) {
    return report_dict(bb::evaluate(bb::family_profile(bb::FamilySpec::from_json(spec_json))));
  });
  m.def("fig1", [](std::size_t k, double step) { return table_rows(bb::fig1_table(k, step)); },
        py::arg("k") = 5, py::arg("delta_step") = 0.01);
  m.def("fig2", [](const std::vector<double>& ps, std::size_t points) {
    return table_rows(bb::fig2_table(ps, points));
  }, py::arg("p_stars") = bb::kFig2PStars, py::arg("eps_points") = 201);
  m.def("fig3", [](const std::vector<std::string>& models, const std::vector<std::size_t>& ks,
                   double q_step) { return table_rows(bb::fig3_table(models, ks, q_step)); },
        py::arg("models") = std::vector<std::string>{"binomial", "exponential"},
        py::arg("ks") = std::vector<std::size_t>{2, 4, 8}, py::arg("q_step") = 0.005);
  m.def("comp_lo_gap", &bb::comp_lo_gap);
  m.def("compare_hi", [](double nu, std::size_t k_max) {
    const auto r = bb::compare_hi_scan(nu, k_max);
    py::dict d;
    d["crossover_k"] = r.crossover_k ? py::cast(*r.crossover_k) : py::none();
    d["min_U"] = r.min_upper;
    d["U_FM_at_k_max"] = r.last_upper_fm;
    d["rows"] = table_rows(r.table);
    return d;
  });
}
