// Command-line front end: bound reports, figure sweeps, comparison scans and
// verification suites. Exit codes: 0 success, 1 invalid input, 2 a check or
// verification failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bayesbounds/error.hpp"
#include "bayesbounds/families.hpp"
#include "bayesbounds/model_io.hpp"
#include "bayesbounds/report.hpp"
#include "bayesbounds/simplex_oracle.hpp"
#include "bayesbounds/sweeps.hpp"
#include "bayesbounds/verify.hpp"
#include "json.hpp"

namespace bb = bayesbounds;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitVerification = 2;

struct Common {
  std::string format = "csv";
  std::string out;
};

bb::OutputFormat output_format(const Common& common) {
  return common.format == "json" ? bb::OutputFormat::kJson : bb::OutputFormat::kCsv;
}

void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(common.out, std::ios::binary | std::ios::trunc);
  if (!file) throw bb::Error(bb::ErrorCode::kIoError, "cannot write " + common.out);
  file << text;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out, "Write output to this file instead of stdout");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bb::Error(bb::ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayes error and its exact bounds for finite classification models"};
  app.require_subcommand(1);

  // report
  Common report_common;
  std::string model_path;
  std::string model_format = "auto";
  std::string family_json;
  std::string family_path;
  std::vector<double> betas;
  bool renormalize = false;
  auto* report = app.add_subcommand("report", "Evaluate all bounds on a model or family profile");
  auto* model_opt = report->add_option("--model", model_path, "Model file (CSV or JSON)");
  report->add_option("--model-format", model_format, "Model file format")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
  auto* family_opt = report->add_option("--family", family_json,
                                        R"(Family spec, e.g. '{"family":"exponential","k":8,"q":0.3}')");
  auto* family_file_opt = report->add_option("--family-file", family_path, "File holding a family spec");
  model_opt->excludes(family_opt)->excludes(family_file_opt);
  family_opt->excludes(family_file_opt);
  report->add_option("--beta", betas, "Renyi orders to include (bits)");
  report->add_flag("--renormalize", renormalize, "Accept any positive total mass and rescale");
  add_common(report, report_common);

  // fig1
  Common fig1_common;
  std::size_t fig1_k = 5;
  double delta_step = 0.01;
  auto* fig1 = app.add_subcommand("fig1", "L, U and Usimpl over the Delta range");
  fig1->add_option("--k", fig1_k, "Number of classes")->capture_default_str();
  fig1->add_option("--delta-step", delta_step, "Delta grid step")->capture_default_str();
  add_common(fig1, fig1_common);

  // fig2
  Common fig2_common;
  std::vector<double> p_stars = bb::kFig2PStars;
  std::size_t eps_points = 201;
  auto* fig2 = app.add_subcommand("fig2", "Three-class bounds over eps for fixed p*");
  fig2->add_option("--p", p_stars, "p* values")->delimiter(',')->capture_default_str();
  fig2->add_option("--eps-points", eps_points, "Points per eps range")->capture_default_str();
  add_common(fig2, fig2_common);

  // fig3
  Common fig3_common;
  std::vector<std::string> models = {"binomial", "exponential"};
  std::vector<std::size_t> fig3_ks = {2, 4, 8};
  double q_step = 0.005;
  auto* fig3 = app.add_subcommand("fig3", "Binomial and exponential models over q in (0, 1/2]");
  fig3->add_option("--models", models, "Models to sweep")
      ->delimiter(',')
      ->check(CLI::IsMember({"binomial", "exponential"}))
      ->capture_default_str();
  fig3->add_option("--k", fig3_ks, "Class counts")->delimiter(',')->capture_default_str();
  fig3->add_option("--q-step", q_step, "q grid step")->capture_default_str();
  add_common(fig3, fig3_common);

  // compare-lo
  Common lo_common;
  std::size_t lo_k_min = 3;
  std::size_t lo_k_max = 50;
  auto* compare_lo = app.add_subcommand("compare-lo", "d_k(ell) for the comp-lo profiles");
  compare_lo->add_option("--k-min", lo_k_min)->capture_default_str();
  compare_lo->add_option("--k-max", lo_k_max)->capture_default_str();
  add_common(compare_lo, lo_common);

  // compare-hi
  Common hi_common;
  double nu = 2.0;
  std::size_t hi_k_max = 10000;
  auto* compare_hi = app.add_subcommand("compare-hi", "U(Delta) against U_FM(H) on comp-hi profiles");
  compare_hi->add_option("--nu", nu)->capture_default_str();
  compare_hi->add_option("--k-max", hi_k_max)->capture_default_str();
  add_common(compare_hi, hi_common);

  // verify
  Common verify_common;
  std::vector<std::string> suites = bb::kVerifySuites;
  bb::VerifyOptions verify_options;
  std::vector<std::string> oracle_specs;
  auto* verify = app.add_subcommand("verify", "Run the randomized and exhaustive verification suites");
  verify->add_option("--suite", suites, "Suites to run")
      ->delimiter(',')
      ->check(CLI::IsMember(bb::kVerifySuites))
      ->capture_default_str();
  verify->add_option("--seed", verify_options.seed)->capture_default_str();
  verify->add_option("--models", verify_options.sandwich_models, "Random models in the sandwich suite")
      ->capture_default_str();
  verify->add_option("--bayes-models", verify_options.brute_force_models)->capture_default_str();
  verify->add_option("--oracle", oracle_specs, "Grid oracle cases as k:N (e.g. 3:12)")->delimiter(',');
  add_common(verify, verify_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*report) {
      bb::JointModel model = [&] {
        if (!model_path.empty()) {
          const auto fmt = model_format == "json"  ? bb::ModelFormat::kJson
                           : model_format == "csv" ? bb::ModelFormat::kCsv
                                                   : bb::ModelFormat::kAuto;
          return bb::load_model(model_path, fmt, {.allow_any_mass = renormalize});
        }
        const std::string spec_text = !family_json.empty() ? family_json : read_file(family_path);
        if (spec_text.empty()) {
          throw bb::Error(bb::ErrorCode::kBadParam, "give --model, --family or --family-file");
        }
        return bb::pure_model(bb::family_profile(bb::FamilySpec::from_json(spec_text)));
      }();
      const bb::BoundsReport r = bb::evaluate(model, betas);
      bb::Table table;
      table.header = bb::report_columns();
      std::vector<bb::Cell> row;
      bb::append_report(row, r);
      for (const auto& renyi : r.renyi) {
        table.header.push_back("renyi_bits_beta_" + bb::format_double(renyi.beta));
        row.emplace_back(renyi.bits);
      }
      table.rows.push_back(std::move(row));
      emit(report_common, bb::render(table, output_format(report_common)));
    } else if (*fig1) {
      emit(fig1_common, bb::render(bb::fig1_table(fig1_k, delta_step), output_format(fig1_common)));
    } else if (*fig2) {
      emit(fig2_common, bb::render(bb::fig2_table(p_stars, eps_points), output_format(fig2_common)));
    } else if (*fig3) {
      emit(fig3_common, bb::render(bb::fig3_table(models, fig3_ks, q_step), output_format(fig3_common)));
    } else if (*compare_lo) {
      emit(lo_common, bb::render(bb::compare_lo_table(lo_k_min, lo_k_max), output_format(lo_common)));
    } else if (*compare_hi) {
      const bb::CompareHiResult result = bb::compare_hi_scan(nu, hi_k_max);
      emit(hi_common, bb::render(result.table, output_format(hi_common)));
      std::cerr << "crossover_k="
                << (result.crossover_k ? std::to_string(*result.crossover_k) : std::string("none"))
                << " min_U=" << bb::format_double(result.min_upper)
                << " U_FM_at_k_max=" << bb::format_double(result.last_upper_fm) << "\n";
    } else if (*verify) {
      if (!oracle_specs.empty()) {
        verify_options.oracle_cases.clear();
        for (const auto& spec : oracle_specs) {
          const auto colon = spec.find(':');
          if (colon == std::string::npos) {
            throw bb::Error(bb::ErrorCode::kBadParam, "oracle case '" + spec + "' is not k:N");
          }
          verify_options.oracle_cases.emplace_back(std::stoul(spec.substr(0, colon)),
                                                   std::stoul(spec.substr(colon + 1)));
        }
      }
      const auto lines = bb::run_verify(suites, verify_options);
      bool all_passed = true;
      nlohmann::json doc = nlohmann::json::array();
      std::ostringstream text;
      for (const auto& line : lines) {
        all_passed = all_passed && line.passed;
        doc.push_back({{"suite", line.suite},
                       {"check", line.name},
                       {"passed", line.passed},
                       {"detail", line.detail}});
        text << (line.passed ? "PASS " : "FAIL ") << "[" << line.suite << "] " << line.name
             << " :: " << line.detail << "\n";
      }
      if (verify_common.format == "json") {
        nlohmann::json out{{"passed", all_passed}, {"checks", doc}};
        // Single exact-oracle run: also attach its full certificate.
        if (suites.size() == 1 && suites.front() == "oracle" &&
            verify_options.oracle_cases.size() == 1) {
          const auto& [k, n] = verify_options.oracle_cases.front();
          out["certificate"] = nlohmann::json::parse(bb::simplex_grid_oracle(k, n).to_json());
        }
        emit(verify_common, out.dump(2) + "\n");
      } else {
        emit(verify_common, text.str());
      }
      return all_passed ? 0 : kExitVerification;
    }
  } catch (const bb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == bb::ErrorCode::kCheckFailed ? kExitVerification : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
