#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "qig/axioms.hpp"
#include "qig/mc_function.hpp"
#include "qig/report.hpp"
#include "qig/representation.hpp"
#include "qig/sampling.hpp"
#include "qig/skew.hpp"
#include "qig/states.hpp"

namespace qig {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms",          "reconstruction-measure",
      "reconstruction-h", "metric-constant",
      "sandwich",        "pure-equality",
      "convexity",       "additivity",
      "time-invariance", "metric-monotonicity",
      "correlation",     "mixture",
      "variant-bridge",  "oracle-equivalence"};
  return names;
}

/// Metrics exercised by `report` when the caller does not supply a list.
inline std::vector<MCFunction> default_metrics() {
  return {MCFunction::wyd(0.25),        MCFunction::wyd(0.5),
          MCFunction::wyd(0.75),        MCFunction::wy(),
          MCFunction::bures(),          MCFunction::kubo(),
          MCFunction::bridge(0.25),     MCFunction::bridge(0.5),
          MCFunction::bridge(0.75),     MCFunction::extreme(0.5),
          MCFunction::extreme(1.0),     MCFunction::variant_bridge(0.5)};
}

namespace detail {

inline bool has_tabulated_measure(const MCFunction& mc) {
  return mc.family() != MetricFamily::VariantBridge;
}

inline bool has_tabulated_h(const MCFunction& mc) {
  switch (mc.family()) {
    case MetricFamily::Wyd:
    case MetricFamily::Kubo:
    case MetricFamily::Bures:
    case MetricFamily::Bridge:
      return true;
    default:
      return false;
  }
}

// library-side trace oracle for the WYD route equivalence suite
inline double wyd_trace_form(const DensityMatrix& rho, const Observable& a, double p) {
  SpectralDecomposition sd = spectral(rho.matrix());
  const Eigen::Index n = rho.dim();
  Eigen::VectorXd ep(n), eq(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = std::max(sd.eigenvalues(i), 0.0);
    ep(i) = std::pow(lam, p);
    eq(i) = std::pow(lam, 1.0 - p);
  }
  const Matrix rp = sd.basis * ep.asDiagonal() * sd.basis.adjoint();
  const Matrix rq = sd.basis * eq.asDiagonal() * sd.basis.adjoint();
  const Matrix c1 = rp * a.matrix() - a.matrix() * rp;
  const Matrix c2 = rq * a.matrix() - a.matrix() * rq;
  return -0.5 * (c1 * c2).trace().real();
}

inline double log_uniform(Sampler& smp, double lo, double hi) {
  return lo * std::exp(smp.uniform(0.0, 1.0) * std::log(hi / lo));
}

// Exceptions count as failed trials; the sentinel keeps reports JSON-numeric.
inline constexpr double kThrownViolation = 1e300;

template <class Fn>
void guarded_trial(PropertyReport& rep, int index, const std::string& label,
                   const Fn& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    rep.record(false, kThrownViolation, index, label + ": " + e.what());
  }
}

}  // namespace detail

/// Runs one named property suite over `trials` seeded cases and the supplied
/// metrics (entries a suite cannot serve are skipped). Failed properties are
/// collected in the report, never thrown.
inline PropertyReport run_suite(std::string_view name, const SamplerConfig& cfg,
                                const std::vector<MCFunction>& metrics) {
  cfg.validate();
  PropertyReport rep;
  rep.suite = std::string(name);
  rep.seed = cfg.seed;
  char label[192];

  auto dim_for = [&cfg](int trial) {
    return cfg.dims[static_cast<std::size_t>(trial) % cfg.dims.size()];
  };
  auto trial_sampler = [&cfg, &name](int trial) {
    std::uint64_t tag = 1469598103934665603ULL;
    for (char ch : name) tag = (tag ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    return Sampler(derive_seed(cfg.seed ^ tag, static_cast<std::uint64_t>(trial)));
  };

  if (name == "axioms") {
    const auto grid = KernelGrid::log_grid(1e-4, 1e4, 7);
    for (const auto& mc : metrics) {
      auto sub = check_axioms(mc, grid, 1e-10, derive_seed(cfg.seed, 0xA0));
      rep.merge(sub);
    }
    return rep;
  }

  if (name == "reconstruction-measure" || name == "reconstruction-h") {
    const bool use_h = (name == "reconstruction-h");
    const double tol = use_h ? 1e-5 : 1e-6;
    for (const auto& mc : metrics) {
      if (use_h ? !detail::has_tabulated_h(mc) : !detail::has_tabulated_measure(mc))
        continue;
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const double x = detail::log_uniform(smp, 1e-3, 1e3);
        const double y = detail::log_uniform(smp, 1e-3, 1e3);
        std::snprintf(label, sizeof label, "%s %s at (%g,%g)", rep.suite.c_str(),
                      mc.name().c_str(), x, y);
        detail::guarded_trial(rep, i, label, [&] {
          const double rec = use_h
                                 ? reconstruct_from_h(h_repr_of(mc), x, y)
                                 : reconstruct_from_measure(measure_of(mc), x, y);
          const double exact = mc.c(x, y);
          const double viol = std::fabs(rec - exact) / exact;
          rep.record(viol <= tol, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "metric-constant") {
    int idx = 0;
    for (const auto& mc : metrics) {
      std::snprintf(label, sizeof label, "metric-constant %s", mc.name().c_str());
      detail::guarded_trial(rep, idx, label, [&] {
        const auto numeric = metric_constant_extrapolated(mc);
        const auto closed = mc.metric_constant();
        if (closed) {
          const double viol =
              numeric ? std::fabs(*numeric - *closed) / *closed : 1.0;
          rep.record(numeric && viol <= 1e-6, viol, idx, label);
        } else {
          rep.record(!numeric, numeric ? *numeric : 0.0, idx, label);
        }
      });
      ++idx;
    }
    return rep;
  }

  if (name == "sandwich") {
    for (const auto& mc : metrics) {
      if (!mc.regular()) continue;
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const int n = dim_for(i);
        const int kind = i % 5;  // 0-2 mixed, 3 near-pure, 4 rank-one
        DensityMatrix rho = kind < 3   ? smp.density(n, cfg.eigenvalue_floor)
                            : kind == 3 ? smp.near_pure(n, cfg.eigenvalue_floor)
                                        : smp.pure(n);
        Observable a = smp.observable(n);
        std::snprintf(label, sizeof label, "sandwich %s n=%d kind=%d",
                      mc.name().c_str(), n, kind);
        detail::guarded_trial(rep, i, label, [&] {
          const double info = skew_info(mc, rho, a);
          const double var = variance(rho, a);
          const double over = info - var;
          double viol = std::max(over, 0.0);
          bool ok = over <= 1e-12;
          if (kind == 4) {  // rank-one state: equality with the variance
            const double eq = std::fabs(info - var);
            viol = std::max(viol, eq);
            ok = ok && eq <= 1e-10;
          }
          rep.record(ok, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "pure-equality") {
    for (const auto& mc : metrics) {
      if (!mc.regular()) continue;
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const int n = dim_for(i);
        DensityMatrix rho = smp.pure(n);
        Observable a = smp.observable(n);
        std::snprintf(label, sizeof label, "pure-equality %s n=%d",
                      mc.name().c_str(), n);
        detail::guarded_trial(rep, i, label, [&] {
          const double viol = std::fabs(skew_info(mc, rho, a) - variance(rho, a));
          rep.record(viol <= 1e-10, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "convexity") {
    for (const auto& mc : metrics) {
      if (!mc.regular()) continue;
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const int n = dim_for(i);
        DensityMatrix r1 = smp.density(n, cfg.eigenvalue_floor);
        DensityMatrix r2 = smp.density(n, cfg.eigenvalue_floor);
        Observable a = smp.observable(n);
        std::snprintf(label, sizeof label, "convexity %s n=%d", mc.name().c_str(), n);
        detail::guarded_trial(rep, i, label, [&] {
          const double i1 = skew_info(mc, r1, a);
          const double i2 = skew_info(mc, r2, a);
          const double v1 = variance(r1, a);
          const double v2 = variance(r2, a);
          double viol = 0.0;
          for (double t : {0.25, 0.5, 0.75}) {
            DensityMatrix mix(t * r1.matrix() + (1.0 - t) * r2.matrix());
            viol = std::max(viol, skew_info(mc, mix, a) - (t * i1 + (1.0 - t) * i2));
            viol = std::max(viol, (t * v1 + (1.0 - t) * v2) - variance(mix, a));
          }
          rep.record(viol <= 1e-12, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "additivity") {
    for (const auto& mc : metrics) {
      if (!mc.regular()) continue;
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const int n2 = (i % 2 == 0) ? 2 : 3;
        DensityMatrix r1 = smp.density(2, cfg.eigenvalue_floor);
        DensityMatrix r2 = smp.density(n2, cfg.eigenvalue_floor);
        Observable a1 = smp.observable(2);
        Observable a2 = smp.observable(n2);
        std::snprintf(label, sizeof label, "additivity %s 2x%d", mc.name().c_str(), n2);
        detail::guarded_trial(rep, i, label, [&] {
          auto [rho, a] = aggregate(r1, r2, a1, a2);
          const double whole = skew_info(mc, rho, a);
          const double parts = skew_info(mc, r1, a1) + skew_info(mc, r2, a2);
          const double viol = std::fabs(whole - parts) / (1.0 + std::fabs(whole));
          rep.record(viol <= 1e-10, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "time-invariance") {
    for (const auto& mc : metrics) {
      if (!mc.regular()) continue;
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const int n = dim_for(i);
        DensityMatrix rho = smp.density(n, cfg.eigenvalue_floor);
        Observable a = smp.observable(n);
        std::snprintf(label, sizeof label, "time-invariance %s n=%d",
                      mc.name().c_str(), n);
        detail::guarded_trial(rep, i, label, [&] {
          Observable h{Matrix(a.matrix() * a.matrix() - a.matrix())};
          const double before = skew_info(mc, rho, a);
          double viol = 0.0;
          for (double t : {0.1, 1.0, 10.0}) {
            const double after = skew_info(mc, evolve(rho, h, t), a);
            viol = std::max(viol,
                            std::fabs(after - before) / (1.0 + std::fabs(before)));
          }
          rep.record(viol <= 1e-10, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "metric-monotonicity") {
    for (const auto& mc : metrics) {
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const bool use_partial_trace = (i % 2 == 0);
        std::snprintf(label, sizeof label, "metric-monotonicity %s %s",
                      mc.name().c_str(), use_partial_trace ? "ptrace" : "kraus");
        detail::guarded_trial(rep, i, label, [&] {
          double before, after;
          if (use_partial_trace) {
            const int n2 = (i % 4 == 0) ? 2 : 3;
            DensityMatrix rho = smp.density(2 * n2, cfg.eigenvalue_floor);
            Observable a = smp.observable(2 * n2);
            auto pt = QuantumChannel::partial_trace_second(2, n2);
            before = metric(mc, rho, a.matrix(), a.matrix()).real();
            after = metric(mc, DensityMatrix(pt.apply(rho.matrix())),
                           pt.apply(a.matrix()), pt.apply(a.matrix()))
                        .real();
          } else {
            const int n = (i % 4 == 1) ? 2 : 3;
            const int env = (i % 8 < 4) ? 2 : 3;
            DensityMatrix rho = smp.density(n, cfg.eigenvalue_floor);
            Observable a = smp.observable(n);
            auto ch = smp.random_channel(n, env);
            Matrix mapped = ch.apply(rho.matrix());
            mapped = 0.5 * (mapped + mapped.adjoint().eval());
            before = metric(mc, rho, a.matrix(), a.matrix()).real();
            after = metric(mc, DensityMatrix(mapped), ch.apply(a.matrix()),
                           ch.apply(a.matrix()))
                        .real();
          }
          const double viol = after - before;
          rep.record(viol <= 1e-12, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "correlation") {
    for (const auto& mc : metrics) {
      if (!mc.regular()) continue;
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const int n = dim_for(i);
        DensityMatrix rho = smp.density(n, cfg.eigenvalue_floor);
        Observable a = smp.observable(n);
        Observable b = smp.observable(n);
        std::snprintf(label, sizeof label, "correlation %s n=%d", mc.name().c_str(), n);
        detail::guarded_trial(rep, i, label, [&] {
          const double ia = skew_info(mc, rho, a);
          const double ib = skew_info(mc, rho, b);
          const Complex caa = correlation(mc, rho, a.matrix(), a.matrix());
          const Complex cab = correlation(mc, rho, a.matrix(), b.matrix());
          const Complex tr_comm =
              (rho.matrix() * (a.matrix() * b.matrix() - b.matrix() * a.matrix()))
                  .trace();
          double viol = std::fabs(caa.real() - ia) / (1.0 + std::fabs(ia));
          viol = std::max(viol,
                          std::fabs(0.5 * std::abs(tr_comm) - std::fabs(cab.imag())));
          viol = std::max(viol,
                          std::fabs(cab.real()) - std::sqrt(ia * ib) - 1e-12);
          rep.record(viol <= 1e-10, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "mixture") {
    for (const auto& mc : metrics) {
      if (!mc.regular() || !detail::has_tabulated_measure(mc)) continue;
      for (int i = 0; i < cfg.trials; ++i) {
        Sampler smp = trial_sampler(i);
        const int n = dim_for(i);
        DensityMatrix rho = smp.density(n, cfg.eigenvalue_floor);
        Observable a = smp.observable(n);
        std::snprintf(label, sizeof label, "mixture %s n=%d", mc.name().c_str(), n);
        detail::guarded_trial(rep, i, label, [&] {
          const double direct = skew_info(mc, rho, a);
          const double mixed = mixture_skew_info(mc, rho, a);
          const double viol = std::fabs(mixed - direct) / (1.0 + std::fabs(direct));
          rep.record(viol <= 1e-6, viol, i, label);
        });
      }
    }
    return rep;
  }

  if (name == "variant-bridge") {
    // pointwise agreement with the Bures endpoint
    {
      auto vb0 = MCFunction::variant_bridge(0.0);
      auto bures = MCFunction::bures();
      int gi = 0;
      for (double x : {1e-3, 0.1, 1.0, 40.0, 1e3})
        for (double y : {2e-3, 0.9, 7.0, 5e2}) {
          const double viol =
              std::fabs(vb0.c(x, y) - bures.c(x, y)) / bures.c(x, y);
          std::snprintf(label, sizeof label, "variant-bridge endpoint (%g,%g)", x, y);
          rep.record(viol <= 1e-12, viol, gi++, label);
        }
    }
    for (int i = 0; i < cfg.trials; ++i) {
      Sampler smp = trial_sampler(i);
      const double p = smp.uniform(0.05, 0.95);
      double t = detail::log_uniform(smp, 1e-2, 1e2);
      if (std::fabs(t - 1.0) < 0.05) t += 0.1;
      std::snprintf(label, sizeof label, "variant-bridge derivative p=%g t=%g", p, t);
      detail::guarded_trial(rep, i, label, [&] {
        const double h = std::min({1e-3, 0.5 * p, 0.5 * (1.0 - p)});
        const double fd = (-variant_bridge_f(p + 2 * h, t) +
                           8 * variant_bridge_f(p + h, t) -
                           8 * variant_bridge_f(p - h, t) +
                           variant_bridge_f(p - 2 * h, t)) /
                          (12.0 * h);
        const double closed = variant_bridge_df_dp(p, t);
        double viol = std::fabs(fd - closed) / (1.0 + std::fabs(closed));
        if (!(closed < 0.0)) viol = std::max(viol, 1.0);
        rep.record(viol <= 1e-6, viol, i, label);
      });
    }
    return rep;
  }

  if (name == "oracle-equivalence") {
    static const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    std::vector<MCFunction> regular;
    for (const auto& mc : metrics)
      if (mc.regular()) regular.push_back(mc);
    for (int i = 0; i < cfg.trials; ++i) {
      Sampler smp = trial_sampler(i);
      const int n = dim_for(i);
      const double p = ps[i % 5];
      DensityMatrix rho = smp.density(n, cfg.eigenvalue_floor);
      Observable a = smp.observable(n);
      std::snprintf(label, sizeof label, "oracle-equivalence wyd(p=%g) n=%d", p, n);
      detail::guarded_trial(rep, i, label, [&] {
        auto mc = MCFunction::wyd(p);
        const double lib = skew_info(mc, rho, a);
        const double trace_form = detail::wyd_trace_form(rho, a, p);
        double viol = std::fabs(lib - trace_form) / (1.0 + std::fabs(lib));
        // d-form vs commutator-form route equivalence across the regular
        // metrics supplied by the caller
        for (const auto& reg : regular) {
          const double d_form = skew_info(reg, rho, a);
          const double hat_form = skew_info_commutator(reg, rho, a);
          viol = std::max(viol,
                          std::fabs(d_form - hat_form) / (1.0 + std::fabs(d_form)));
        }
        rep.record(viol <= 1e-10, viol, i, label);
      });
    }
    return rep;
  }

  throw ParameterError("run_suite: unknown suite '" + std::string(name) + "'");
}

/// Every suite over the same configuration; order fixed by suite_names().
inline std::vector<PropertyReport> run_all_suites(
    const SamplerConfig& cfg, const std::vector<MCFunction>& metrics) {
  std::vector<PropertyReport> out;
  out.reserve(suite_names().size());
  for (const auto& name : suite_names()) out.push_back(run_suite(name, cfg, metrics));
  return out;
}

}  // namespace qig
