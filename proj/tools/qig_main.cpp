// qig: evaluate monotone-metric kernels, reconstruct them from their
// canonical representations, compute metric adjusted skew information on
// density matrices, and run the seeded certification suites.
//
// Exit codes: 0 success, 1 property failure, 2 usage or file error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qig/qig.hpp"

namespace {

using namespace qig;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct MetricFlags {
  std::string metric;
  std::optional<double> p, gamma, lambda;
};

void add_metric_flags(CLI::App* cmd, MetricFlags& mf) {
  cmd->add_option("--metric", mf.metric,
                  "wyd | wy | bures | kubo | bridge | extreme | variant-bridge")
      ->required();
  cmd->add_option("--p", mf.p, "parameter for wyd / variant-bridge");
  cmd->add_option("--gamma", mf.gamma, "parameter for bridge");
  cmd->add_option("--lambda", mf.lambda, "parameter for extreme (and f_lambda)");
}

MCFunction make_metric(const MetricFlags& mf) {
  auto need = [](const std::optional<double>& v, const char* what) {
    if (!v) throw ParameterError(std::string("missing required flag ") + what);
    return *v;
  };
  if (mf.metric == "wyd") return MCFunction::wyd(need(mf.p, "--p"));
  if (mf.metric == "wy") return MCFunction::wy();
  if (mf.metric == "bures") return MCFunction::bures();
  if (mf.metric == "kubo") return MCFunction::kubo();
  if (mf.metric == "bridge") return MCFunction::bridge(need(mf.gamma, "--gamma"));
  if (mf.metric == "extreme") return MCFunction::extreme(need(mf.lambda, "--lambda"));
  if (mf.metric == "variant-bridge" || mf.metric == "variant_bridge")
    return MCFunction::variant_bridge(need(mf.p, "--p"));
  throw ParameterError("unknown metric '" + mf.metric + "'");
}

// --rho/--obs accept a file path or an inline spec: diag(...), sigmax,
// sigmay, sigmaz, identity(n)
Matrix parse_matrix_arg(const std::string& spec) {
  if (spec == "sigmax") return sigma_x();
  if (spec == "sigmay") return sigma_y();
  if (spec == "sigmaz") return sigma_z();
  if (spec.rfind("diag(", 0) == 0 && spec.back() == ')') {
    std::vector<double> vals;
    std::string body = spec.substr(5, spec.size() - 6);
    for (auto& ch : body)
      if (ch == ',') ch = ' ';
    std::istringstream ss(body);
    double v;
    while (ss >> v) vals.push_back(v);
    if (vals.empty()) throw ParameterError("empty diag() spec");
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(vals.size()),
                            static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = vals[i];
    return m;
  }
  if (spec.rfind("identity(", 0) == 0 && spec.back() == ')') {
    const int n = std::stoi(spec.substr(9, spec.size() - 10));
    return Matrix::Identity(n, n);
  }
  return load_matrix(spec).entries;
}

void print_report_row(const PropertyReport& rep, const std::string& metric_name) {
  std::printf("%s,%s,%d,%d,%.6g,%s\n", rep.suite.c_str(), metric_name.c_str(),
              rep.trials, rep.failures, rep.max_violation,
              rep.failures == 0 ? "pass" : "FAIL");
}

std::vector<MCFunction> metrics_from_names(const std::vector<std::string>& names,
                                           const MetricFlags& mf) {
  if (names.empty()) return default_metrics();
  std::vector<MCFunction> out;
  for (const auto& n : names) {
    MetricFlags single = mf;
    single.metric = n;
    out.push_back(make_metric(single));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monotone quantum metrics and metric adjusted skew information"};
  app.require_subcommand(1);

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "evaluate c, c_hat, d, f_lambda at (x,y)");
  MetricFlags eval_mf;
  double eval_x = 1.0, eval_y = 1.0;
  add_metric_flags(eval, eval_mf);
  eval->add_option("--x", eval_x, "first argument")->required();
  eval->add_option("--y", eval_y, "second argument")->required();

  // ---- constant ----
  auto* constant = app.add_subcommand("constant", "metric constant m(c)");
  MetricFlags const_mf;
  bool const_numeric = false;
  add_metric_flags(constant, const_mf);
  constant->add_flag("--numeric", const_numeric,
                     "extrapolate numerically instead of using the closed form");

  // ---- measure ----
  auto* measure = app.add_subcommand("measure", "representing measure: density samples, atoms, mass");
  MetricFlags meas_mf;
  int meas_samples = 19;
  add_metric_flags(measure, meas_mf);
  measure->add_option("--samples", meas_samples, "number of density sample points");

  // ---- reconstruct ----
  auto* rec = app.add_subcommand("reconstruct",
                                 "reconstruct c from a representation, report max error");
  MetricFlags rec_mf;
  std::string rec_route = "measure";
  double rec_lo = 1e-3, rec_hi = 1e3, rec_tol = 0.0;
  int rec_points = 7;
  add_metric_flags(rec, rec_mf);
  rec->add_option("--route", rec_route, "measure | h")->required();
  rec->add_option("--grid-min", rec_lo, "grid lower bound");
  rec->add_option("--grid-max", rec_hi, "grid upper bound");
  rec->add_option("--grid-points", rec_points, "points per axis");
  rec->add_option("--tol", rec_tol, "failure threshold (default per route)");

  // ---- skew ----
  auto* skew = app.add_subcommand("skew", "metric adjusted skew information");
  MetricFlags skew_mf;
  std::string skew_rho, skew_obs;
  add_metric_flags(skew, skew_mf);
  skew->add_option("--rho", skew_rho, "density matrix file or inline spec")->required();
  skew->add_option("--obs", skew_obs, "observable file or inline spec")->required();

  // ---- corr ----
  auto* corr = app.add_subcommand("corr", "metric adjusted correlation");
  MetricFlags corr_mf;
  std::string corr_rho, corr_a, corr_b;
  add_metric_flags(corr, corr_mf);
  corr->add_option("--rho", corr_rho, "density matrix file or inline spec")->required();
  corr->add_option("--a", corr_a, "first observable")->required();
  corr->add_option("--b", corr_b, "second observable")->required();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run one property suite");
  std::string verify_suite;
  SamplerConfig verify_cfg;
  std::vector<std::string> verify_metric_names;
  MetricFlags verify_mf;
  double verify_fault = 0.0;
  std::string verify_out;
  verify->add_option("--suite", verify_suite, "suite name")->required();
  verify->add_option("--seed", verify_cfg.seed, "sampler seed");
  verify->add_option("--trials", verify_cfg.trials, "trial count");
  verify->add_option("--dims", verify_cfg.dims, "dimensions, e.g. --dims 2,3,4")
      ->delimiter(',');
  verify->add_option("--metric", verify_metric_names, "metrics to exercise")
      ->delimiter(',');
  verify->add_option("--p", verify_mf.p, "parameter for wyd / variant-bridge");
  verify->add_option("--gamma", verify_mf.gamma, "parameter for bridge");
  verify->add_option("--lambda", verify_mf.lambda, "parameter for extreme");
  verify->add_option("--fault", verify_fault,
                     "perturb every kernel by this offset (fault injection)");
  verify->add_option("--out", verify_out, "write the report as JSON");

  // ---- report ----
  auto* report = app.add_subcommand("report", "run all suites, emit a summary table");
  SamplerConfig report_cfg;
  report_cfg.trials = 100;
  std::string report_out;
  std::vector<std::string> report_metric_names;
  MetricFlags report_mf;
  report->add_option("--seed", report_cfg.seed, "sampler seed");
  report->add_option("--trials", report_cfg.trials, "trials per suite");
  report->add_option("--dims", report_cfg.dims, "dimensions")->delimiter(',');
  report->add_option("--metric", report_metric_names, "metrics to exercise")
      ->delimiter(',');
  report->add_option("--p", report_mf.p, "parameter for wyd / variant-bridge");
  report->add_option("--gamma", report_mf.gamma, "parameter for bridge");
  report->add_option("--lambda", report_mf.lambda, "parameter for extreme");
  report->add_option("--out", report_out, "write all reports as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) {
      auto mc = make_metric(eval_mf);
      std::printf("quantity,value\n");
      std::printf("c,%.12g\n", mc.c(eval_x, eval_y));
      std::printf("c_hat,%.12g\n", mc.c_hat(eval_x, eval_y));
      if (mc.regular())
        std::printf("d,%.12g\n", mc.d(eval_x, eval_y));
      else
        std::printf("d,non-regular\n");
      if (eval_mf.lambda)
        std::printf("f_lambda,%.12g\n", f_lambda(*eval_mf.lambda, eval_x, eval_y));
      return kExitOk;
    }

    if (*constant) {
      auto mc = make_metric(const_mf);
      const auto m = const_numeric ? metric_constant_extrapolated(mc)
                                   : mc.metric_constant();
      std::printf("metric,constant\n");
      if (m)
        std::printf("%s,%.12g\n", mc.name().c_str(), *m);
      else
        std::printf("%s,non-regular\n", mc.name().c_str());
      return kExitOk;
    }

    if (*measure) {
      auto mc = make_metric(meas_mf);
      const auto mu = measure_of(mc);
      std::printf("kind,location,value\n");
      for (int i = 1; i <= meas_samples; ++i) {
        const double lam = static_cast<double>(i) / (meas_samples + 1);
        std::printf("density,%.12g,%.12g\n", lam,
                    mu.has_density() ? mu.density(lam) : 0.0);
      }
      for (const auto& atom : mu.atoms())
        std::printf("atom,%.12g,%.12g\n", atom.location, atom.mass);
      std::printf("total_mass,,%.12g\n", mu.total_mass());
      return kExitOk;
    }

    if (*rec) {
      auto mc = make_metric(rec_mf);
      const bool use_h = (rec_route == "h");
      if (!use_h && rec_route != "measure")
        throw ParameterError("--route must be 'measure' or 'h'");
      const double tol = rec_tol > 0.0 ? rec_tol : (use_h ? 1e-5 : 1e-6);
      double worst = 0.0;
      const double step = std::log(rec_hi / rec_lo) / (rec_points - 1);
      for (int i = 0; i < rec_points; ++i)
        for (int j = 0; j < rec_points; ++j) {
          const double x = rec_lo * std::exp(step * i);
          const double y = rec_lo * std::exp(step * j);
          const double v = use_h
                               ? reconstruct_from_h(h_repr_of(mc), x, y)
                               : reconstruct_from_measure(measure_of(mc), x, y);
          worst = std::max(worst, std::fabs(v - mc.c(x, y)) / mc.c(x, y));
        }
      std::printf("route,metric,max_rel_error,tol,status\n");
      std::printf("%s,%s,%.6g,%.2g,%s\n", rec_route.c_str(), mc.name().c_str(),
                  worst, tol, worst <= tol ? "pass" : "FAIL");
      return worst <= tol ? kExitOk : kExitPropertyFailure;
    }

    if (*skew) {
      auto mc = make_metric(skew_mf);
      DensityMatrix rho{parse_matrix_arg(skew_rho)};
      Observable a{parse_matrix_arg(skew_obs)};
      const double info = skew_info(mc, rho, a);
      const double var = variance(rho, a);
      std::printf("I,Var,ratio\n");
      std::printf("%.12g,%.12g,%.12g\n", info, var,
                  var > 0.0 ? info / var : 0.0);
      return kExitOk;
    }

    if (*corr) {
      auto mc = make_metric(corr_mf);
      DensityMatrix rho{parse_matrix_arg(corr_rho)};
      const Matrix a = parse_matrix_arg(corr_a);
      const Matrix b = parse_matrix_arg(corr_b);
      const Complex c = correlation(mc, rho, a, b);
      std::printf("re,im\n%.12g,%.12g\n", c.real(), c.imag());
      return kExitOk;
    }

    if (*verify) {
      std::vector<MCFunction> metrics = metrics_from_names(verify_metric_names, verify_mf);
      if (verify_fault != 0.0)
        for (auto& m : metrics) m = m.perturbed(verify_fault);
      const auto rep = run_suite(verify_suite, verify_cfg, metrics);
      std::printf("suite,metrics,trials,failures,max_violation,status\n");
      std::string names;
      for (const auto& m : metrics) names += (names.empty() ? "" : "|") + m.name();
      std::printf("%s,%s,%d,%d,%.6g,%s\n", rep.suite.c_str(), names.c_str(),
                  rep.trials, rep.failures, rep.max_violation,
                  rep.passed() ? "pass" : "FAIL");
      for (const auto& d : rep.details)
        std::fprintf(stderr, "failure[%d] %s (violation %.3g)\n", d.index,
                     d.label.c_str(), d.violation);
      if (!verify_out.empty()) {
        std::ofstream out(verify_out);
        out << rep.to_json().dump(2) << "\n";
      }
      return rep.passed() ? kExitOk : kExitPropertyFailure;
    }

    if (*report) {
      std::vector<MCFunction> metrics = metrics_from_names(report_metric_names, report_mf);
      std::printf("suite,metric,trials,failures,max_violation,status\n");
      bool any_failures = false;
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& name : suite_names()) {
        for (const auto& mc : metrics) {
          // the variant-bridge suite certifies that family itself; one row
          if (name == "variant-bridge" && mc.family() != MetricFamily::VariantBridge)
            continue;
          const auto rep = run_suite(name, report_cfg, {mc});
          if (rep.trials == 0) continue;  // suite does not apply to this metric
          print_report_row(rep, mc.name());
          any_failures = any_failures || !rep.passed();
          if (!report_out.empty()) {
            auto j = rep.to_json();
            j["metric"] = mc.name();
            all.push_back(j);
          }
        }
      }
      if (!report_out.empty()) {
        std::ofstream out(report_out);
        out << all.dump(2) << "\n";
      }
      return any_failures ? kExitPropertyFailure : kExitOk;
    }
  } catch (const FormatError& e) {
    std::fprintf(stderr, "error: %s (line %d)\n", e.what(), e.line());
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
