// Acceptance suite: runs every certification criterion at its pinned
// tolerance and prints one pass/fail line per criterion. Exit code is the
// number of failed criteria (0 means everything passed).

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qig/qig.hpp"
#include "../oracles.hpp"

using namespace qig;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool passed, const std::string& detail) {
  std::printf("[%s] %02d %-28s %s\n", passed ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!passed) ++g_failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs;
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) xs.push_back(lo * std::exp(step * i));
  return xs;
}

// --- 1. WYD oracle equivalence ------------------------------------------
void criterion_1() {
  const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  const int dims[] = {2, 3, 4, 6};
  const std::vector<MCFunction> regular = {
      MCFunction::wy(), MCFunction::bures(), MCFunction::extreme(0.5),
      MCFunction::variant_bridge(0.5)};
  double worst = 0.0, worst_route = 0.0;
  for (int i = 0; i < 500; ++i) {
    Sampler smp(derive_seed(1001, i));
    const int n = dims[i % 4];
    DensityMatrix rho = smp.density(n);
    Observable a = smp.observable(n);
    for (double p : ps) {
      const double lib = skew_info(MCFunction::wyd(p), rho, a);
      const double orc = oracles::wyd_skew_commutator_trace(rho.matrix(), a.matrix(), p);
      worst = std::max(worst, std::fabs(lib - orc) / (1.0 + std::fabs(lib)));
      const double hat = skew_info_commutator(MCFunction::wyd(p), rho, a);
      worst_route = std::max(worst_route,
                             std::fabs(lib - hat) / (1.0 + std::fabs(lib)));
    }
    for (const auto& mc : regular) {
      const double d_form = skew_info(mc, rho, a);
      const double hat_form = skew_info_commutator(mc, rho, a);
      worst_route = std::max(worst_route, std::fabs(d_form - hat_form) /
                                              (1.0 + std::fabs(d_form)));
    }
  }
  report(1, "oracle-equivalence (WYD)", worst <= 1e-10 && worst_route <= 1e-10,
         "500 samples x 5 p-values, max " + fmt("%.3g", worst) +
             " <= 1e-10; route equivalence max " + fmt("%.3g", worst_route));
}

// --- 2. closed 2x2 value --------------------------------------------------
void criterion_2() {
  auto rho = diagonal_density({0.9, 0.1});
  const double info = skew_info(MCFunction::wy(), rho, Observable{sigma_x()});
  const double err = std::fabs(info - 0.4);
  report(2, "closed 2x2 WY value", err <= 1e-12,
         "I = " + fmt("%.15g", info) + ", |I - 0.4| = " + fmt("%.3g", err) +
             " <= 1e-12");
}

// --- 3. measure reconstruction -------------------------------------------
void criterion_3() {
  const auto grid = log_grid(1e-3, 1e3, 7);
  double worst = 0.0;
  std::vector<MCFunction> metrics = {
      MCFunction::wyd(0.3),   MCFunction::wyd(0.5),  MCFunction::wyd(0.7),
      MCFunction::kubo(),     MCFunction::bridge(0.25),
      MCFunction::bridge(0.5), MCFunction::bridge(0.75)};
  for (const auto& mc : metrics) {
    const auto mu = measure_of(mc);
    for (double x : grid)
      for (double y : grid) {
        const double rec = reconstruct_from_measure(mu, x, y);
        worst = std::max(worst, std::fabs(rec - mc.c(x, y)) / mc.c(x, y));
      }
  }
  double atom_worst = 0.0;
  for (const auto& mc : {MCFunction::bridge(0.0), MCFunction::bridge(1.0),
                         MCFunction::extreme(0.35), MCFunction::extreme(0.8)}) {
    const auto mu = measure_of(mc);
    for (double x : grid)
      for (double y : grid) {
        const double rec = reconstruct_from_measure(mu, x, y);
        atom_worst = std::max(atom_worst, std::fabs(rec - mc.c(x, y)) / mc.c(x, y));
      }
  }
  report(3, "measure reconstruction", worst <= 1e-6 && atom_worst <= 1e-13,
         "density max " + fmt("%.3g", worst) + " <= 1e-6, atoms max " +
             fmt("%.3g", atom_worst) + " (exact)");
}

// --- 4. h-representation reconstruction ----------------------------------
void criterion_4() {
  const auto grid = log_grid(1e-3, 1e3, 7);
  double worst = 0.0;
  const bool c0_ok =
      std::fabs(h_repr_of(MCFunction::wy()).C0 - 4.0 * (std::sqrt(2.0) - 1.0)) < 1e-14 &&
      std::fabs(h_repr_of(MCFunction::kubo()).C0 - kPi / 2.0) < 1e-14 &&
      std::fabs(h_repr_of(MCFunction::bridge(0.5)).C0 - std::pow(2.0, 0.5)) < 1e-14;
  for (const auto& mc : {MCFunction::wy(), MCFunction::kubo(),
                         MCFunction::bridge(0.0), MCFunction::bridge(0.5),
                         MCFunction::bridge(1.0)}) {
    const auto hr = h_repr_of(mc);
    for (double x : grid)
      for (double y : grid) {
        const double rec = reconstruct_from_h(hr, x, y);
        worst = std::max(worst, std::fabs(rec - mc.c(x, y)) / mc.c(x, y));
      }
  }
  report(4, "h reconstruction", worst <= 1e-5 && c0_ok,
         "max " + fmt("%.3g", worst) + " <= 1e-5 with tabulated C0 values");
}

// --- 5. metric constants ---------------------------------------------------
void criterion_5() {
  double worst = 0.0;
  bool classify_ok = true;
  auto check_value = [&worst](const MCFunction& mc, double expected) {
    const auto est = metric_constant_extrapolated(mc);
    if (!est) {
      worst = std::max(worst, 1.0);
      return;
    }
    worst = std::max(worst, std::fabs(*est - expected) / expected);
  };
  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) check_value(MCFunction::wyd(p), p * (1 - p));
  for (double l : {0.25, 0.5, 0.75, 1.0})
    check_value(MCFunction::extreme(l), 2 * l / ((1 + l) * (1 + l)));
  check_value(MCFunction::bures(), 0.5);
  for (double p : {0.25, 0.5, 0.75})
    check_value(MCFunction::variant_bridge(p),
                0.5 * std::pow(4 * (1 - p) / ((2 - p) * (2 - p)), p));
  classify_ok = classify_ok && !metric_constant_extrapolated(MCFunction::kubo());
  for (double g : {0.25, 0.5, 0.75, 1.0})
    classify_ok = classify_ok && !metric_constant_extrapolated(MCFunction::bridge(g));
  report(5, "metric constants", worst <= 1e-6 && classify_ok,
         "numeric vs closed max " + fmt("%.3g", worst) +
             " <= 1e-6; Kubo/bridge(gamma>0) non-regular: " +
             (classify_ok ? "yes" : "NO"));
}

// --- 6. sandwich and pure equality ----------------------------------------
void criterion_6() {
  const std::vector<MCFunction> metrics = {
      MCFunction::wyd(0.25), MCFunction::wyd(0.5), MCFunction::wyd(0.75),
      MCFunction::wy(),      MCFunction::bures(),  MCFunction::extreme(0.5),
      MCFunction::variant_bridge(0.5)};
  const int dims[] = {2, 3, 4, 6};
  double worst_bound = 0.0, worst_eq = 0.0;
  int violations = 0;
  for (const auto& mc : metrics) {
    for (int i = 0; i < 1000; ++i) {
      Sampler smp(derive_seed(60006, i));
      const int n = dims[i % 4];
      const bool rank_one = (i % 5 == 4);  // rank-one draws across all dims
      DensityMatrix rho = rank_one ? smp.pure(n) : smp.density(n);
      Observable a = smp.observable(n);
      const double info = skew_info(mc, rho, a);
      const double var = variance(rho, a);
      if (info < 0.0 || info > var + 1e-12) ++violations;
      worst_bound = std::max(worst_bound, info - var);
      if (rank_one) worst_eq = std::max(worst_eq, std::fabs(info - var));
    }
  }
  report(6, "sandwich & pure equality", violations == 0 && worst_eq <= 1e-10,
         "7000 samples, 0 bound violations (max overshoot " +
             fmt("%.3g", worst_bound) + "), rank-one max |I-Var| " +
             fmt("%.3g", worst_eq) + " <= 1e-10");
}

// --- 7. convexity / concavity ---------------------------------------------
void criterion_7() {
  const std::vector<MCFunction> metrics = {
      MCFunction::wy(), MCFunction::wyd(0.25), MCFunction::bures(),
      MCFunction::extreme(0.5), MCFunction::variant_bridge(0.5)};
  const int dims[] = {2, 3, 4};
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Sampler smp(derive_seed(70007, i));
    const auto& mc = metrics[i % metrics.size()];
    const int n = dims[i % 3];
    DensityMatrix r1 = smp.density(n);
    DensityMatrix r2 = smp.density(n);
    Observable a = smp.observable(n);
    const double i1 = skew_info(mc, r1, a), i2 = skew_info(mc, r2, a);
    const double v1 = variance(r1, a), v2 = variance(r2, a);
    for (double t : {0.25, 0.5, 0.75}) {
      DensityMatrix mix(t * r1.matrix() + (1 - t) * r2.matrix());
      const double ci = skew_info(mc, mix, a) - (t * i1 + (1 - t) * i2);
      const double cv = (t * v1 + (1 - t) * v2) - variance(mix, a);
      worst = std::max({worst, ci, cv});
      if (ci > 1e-12 || cv > 1e-12) ++violations;
    }
  }
  report(7, "convexity & concavity", violations == 0,
         "1000 segments x 3 points, max violation " + fmt("%.3g", worst) +
             " <= 1e-12");
}

// --- 8. additivity & time invariance ---------------------------------------
void criterion_8() {
  double worst_add = 0.0, worst_time = 0.0;
  for (int i = 0; i < 200; ++i) {
    Sampler smp(derive_seed(80008, i));
    const auto mc = (i % 2 == 0) ? MCFunction::wy() : MCFunction::wyd(0.3);
    const int n2 = (i % 2 == 0) ? 2 : 3;
    DensityMatrix r1 = smp.density(2);
    DensityMatrix r2 = smp.density(n2);
    Observable a1 = smp.observable(2);
    Observable a2 = smp.observable(n2);
    auto [rho, a] = aggregate(r1, r2, a1, a2);
    const double whole = skew_info(mc, rho, a);
    const double parts = skew_info(mc, r1, a1) + skew_info(mc, r2, a2);
    worst_add = std::max(worst_add,
                         std::fabs(whole - parts) / (1.0 + std::fabs(whole)));
  }
  for (int i = 0; i < 200; ++i) {
    Sampler smp(derive_seed(80108, i));
    const auto mc = (i % 2 == 0) ? MCFunction::bures() : MCFunction::wyd(0.7);
    const int n = 2 + (i % 3);
    DensityMatrix rho = smp.density(n);
    Observable a = smp.observable(n);
    Observable h{Matrix(a.matrix() * a.matrix() - a.matrix())};
    const double before = skew_info(mc, rho, a);
    for (double t : {0.1, 1.0, 10.0}) {
      const double after = skew_info(mc, evolve(rho, h, t), a);
      worst_time = std::max(worst_time,
                            std::fabs(after - before) / (1.0 + std::fabs(before)));
    }
  }
  report(8, "additivity & time invariance",
         worst_add <= 1e-10 && worst_time <= 1e-10,
         "200+200 cases, max " + fmt("%.3g", worst_add) + " / " +
             fmt("%.3g", worst_time) + " <= 1e-10");
}

// --- 9. metric monotonicity under channels ---------------------------------
void criterion_9() {
  double worst = 0.0;
  int violations = 0;
  const std::vector<MCFunction> metrics = {MCFunction::wy(), MCFunction::bures(),
                                           MCFunction::wyd(0.3),
                                           MCFunction::kubo()};
  for (int i = 0; i < 500; ++i) {
    Sampler smp(derive_seed(90009, i));
    const auto& mc = metrics[i % metrics.size()];
    double before, after;
    if (i % 2 == 0) {
      const int n2 = (i % 4 == 0) ? 2 : 3;
      DensityMatrix rho = smp.density(2 * n2);
      Observable a = smp.observable(2 * n2);
      auto pt = QuantumChannel::partial_trace_second(2, n2);
      before = metric(mc, rho, a.matrix(), a.matrix()).real();
      after = metric(mc, DensityMatrix(pt.apply(rho.matrix())),
                     pt.apply(a.matrix()), pt.apply(a.matrix()))
                  .real();
    } else {
      const int n = (i % 4 == 1) ? 2 : 3;
      DensityMatrix rho = smp.density(n);
      Observable a = smp.observable(n);
      auto ch = smp.random_channel(n, 2 + (i % 2));
      Matrix mapped = ch.apply(rho.matrix());
      mapped = 0.5 * (mapped + mapped.adjoint().eval());
      before = metric(mc, rho, a.matrix(), a.matrix()).real();
      after = metric(mc, DensityMatrix(mapped), ch.apply(a.matrix()),
                     ch.apply(a.matrix()))
                  .real();
    }
    worst = std::max(worst, after - before);
    if (after > before + 1e-12) ++violations;
  }
  report(9, "metric monotonicity", violations == 0,
         "500 channel cases, max K_T - K " + fmt("%.3g", worst) + " <= 1e-12");
}

// --- 10. mixture corollary --------------------------------------------------
void criterion_10() {
  double worst = 0.0;
  for (double p : {0.25, 0.5}) {
    const auto mc = MCFunction::wyd(p);
    for (int i = 0; i < 100; ++i) {
      Sampler smp(derive_seed(100010, i));
      const int n = 2 + (i % 3);
      DensityMatrix rho = smp.density(n);
      Observable a = smp.observable(n);
      const double direct = skew_info(mc, rho, a);
      const double mixed = mixture_skew_info(mc, rho, a);
      worst = std::max(worst, std::fabs(mixed - direct) / (1.0 + std::fabs(direct)));
    }
  }
  report(10, "mixture corollary", worst <= 1e-6,
         "WYD(0.25,0.5) x 100 samples, max " + fmt("%.3g", worst) + " <= 1e-6");
}

// --- 11. correlation identities ----------------------------------------------
void criterion_11() {
  double worst_diag = 0.0, worst_im = 0.0, worst_cs = 0.0;
  const std::vector<MCFunction> metrics = {MCFunction::wy(), MCFunction::bures(),
                                           MCFunction::wyd(0.25),
                                           MCFunction::variant_bridge(0.5)};
  for (int i = 0; i < 500; ++i) {
    Sampler smp(derive_seed(110011, i));
    const auto& mc = metrics[i % metrics.size()];
    const int n = 2 + (i % 3);
    DensityMatrix rho = smp.density(n);
    Observable a = smp.observable(n);
    Observable b = smp.observable(n);
    const double ia = skew_info(mc, rho, a);
    const double ib = skew_info(mc, rho, b);
    const Complex caa = correlation(mc, rho, a.matrix(), a.matrix());
    const Complex cab = correlation(mc, rho, a.matrix(), b.matrix());
    const Complex tr_comm =
        (rho.matrix() * (a.matrix() * b.matrix() - b.matrix() * a.matrix())).trace();
    worst_diag = std::max(worst_diag, std::fabs(caa.real() - ia) / (1.0 + ia));
    worst_im = std::max(worst_im,
                        std::fabs(0.5 * std::abs(tr_comm) - std::fabs(cab.imag())));
    worst_cs = std::max(worst_cs, std::fabs(cab.real()) - std::sqrt(ia * ib));
  }
  report(11, "correlation identities",
         worst_diag <= 1e-10 && worst_im <= 1e-10 && worst_cs <= 1e-12,
         "500 samples: diag " + fmt("%.3g", worst_diag) + ", Im " +
             fmt("%.3g", worst_im) + ", CS slack " + fmt("%.3g", worst_cs));
}

// --- 12. boundary-measure oracle ---------------------------------------------
void criterion_12() {
  double worst = 0.0;
  for (double lam : {0.2, 0.5, 0.8}) {
    for (const auto& mc : {MCFunction::wyd(0.5), MCFunction::kubo()}) {
      const double est = boundary_density_oracle(mc, lam, 1e-6);
      const double exact = measure_of(mc).density(lam);
      worst = std::max(worst, std::fabs(est - exact) / exact);
    }
  }
  report(12, "boundary-measure oracle", worst <= 1e-3,
         "WYD(0.5)+Kubo at lam in {0.2,0.5,0.8}, max " + fmt("%.3g", worst) +
             " <= 1e-3");
}

// --- 13. variant bridge --------------------------------------------------------
void criterion_13() {
  double worst_c = 0.0;
  auto vb0 = MCFunction::variant_bridge(0.0);
  auto bures = MCFunction::bures();
  for (double x : log_grid(1e-3, 1e3, 7))
    for (double y : log_grid(1e-3, 1e3, 7))
      worst_c = std::max(worst_c,
                         std::fabs(vb0.c(x, y) - bures.c(x, y)) / bures.c(x, y));
  double worst_d = 0.0;
  bool all_negative = true;
  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (double t : {0.02, 0.2, 0.5, 2.0, 5.0, 50.0}) {
      const double h = std::min({1e-3, 0.5 * p, 0.5 * (1.0 - p)});
      const double fd = (-variant_bridge_f(p + 2 * h, t) +
                         8 * variant_bridge_f(p + h, t) -
                         8 * variant_bridge_f(p - h, t) +
                         variant_bridge_f(p - 2 * h, t)) /
                        (12.0 * h);
      const double closed = variant_bridge_df_dp(p, t);
      worst_d = std::max(worst_d, std::fabs(fd - closed) / (1.0 + std::fabs(closed)));
      all_negative = all_negative && closed < 0.0;
    }
  report(13, "variant bridge", worst_c <= 1e-12 && worst_d <= 1e-6 && all_negative,
         "c_{p=0} vs Bures " + fmt("%.3g", worst_c) + "; dF/dp FD vs closed " +
             fmt("%.3g", worst_d) + ", all negative: " + (all_negative ? "yes" : "NO"));
}

// --- 14. fault injection --------------------------------------------------------
void criterion_14() {
  SamplerConfig cfg;
  cfg.seed = 14;
  cfg.trials = 80;
  cfg.dims = {2, 3};
  bool all_detected = true;
  std::string detail;
  for (const auto& base : {MCFunction::wy(), MCFunction::wyd(0.3), MCFunction::bures()}) {
    const std::vector<MCFunction> faulted = {base.perturbed(1e-3)};
    const bool rec_fails =
        run_suite("reconstruction-measure", cfg, faulted).failures > 0;
    const bool sand_fails = run_suite("sandwich", cfg, faulted).failures > 0;
    // the same configuration is clean without the fault
    const std::vector<MCFunction> clean = {base};
    const bool clean_ok =
        run_suite("reconstruction-measure", cfg, clean).failures == 0 &&
        run_suite("sandwich", cfg, clean).failures == 0;
    all_detected = all_detected && rec_fails && sand_fails && clean_ok;
    detail += base.name() + (rec_fails && sand_fails ? ":detected " : ":MISSED ");
  }
  report(14, "fault injection", all_detected, detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite: metric adjusted skew information library\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  criterion_14();
  if (g_failures == 0) {
    std::printf("all 14 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
