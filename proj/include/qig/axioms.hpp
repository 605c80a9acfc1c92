#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qig/errors.hpp"
#include "qig/mc_function.hpp"
#include "qig/random.hpp"
#include "qig/report.hpp"

namespace qig {

/// A sampled kernel table: strictly positive (x,y) pairs with optional
/// tabulated values.
struct KernelGrid {
  std::vector<std::pair<double, double>> points;
  std::vector<double> values;

  void validate() const {
    if (!values.empty() && values.size() != points.size())
      throw DimensionError("KernelGrid: points/values length mismatch");
    for (const auto& [x, y] : points)
      if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("KernelGrid: points must be strictly positive");
  }

  /// Logarithmically spaced grid over [lo, hi]^2.
  static KernelGrid log_grid(double lo, double hi, int per_axis) {
    KernelGrid g;
    const double step = std::log(hi / lo) / (per_axis - 1);
    for (int i = 0; i < per_axis; ++i)
      for (int j = 0; j < per_axis; ++j)
        g.points.emplace_back(lo * std::exp(step * i), lo * std::exp(step * j));
    g.validate();
    return g;
  }

  static KernelGrid tabulate(const MCFunction& mc, KernelGrid g) {
    g.values.clear();
    g.values.reserve(g.points.size());
    for (const auto& [x, y] : g.points) g.values.push_back(mc.c(x, y));
    g.validate();
    return g;
  }
};

namespace detail {

inline Eigen::MatrixXcd random_hermitian(Rng& rng, int n) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.cnormal();
  return 0.5 * (m + m.adjoint().eval());
}

// f applied to a Hermitian matrix through its eigendecomposition.
template <class F>
Eigen::MatrixXcd matrix_function(const Eigen::MatrixXcd& h, const F& f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) ev(i) = f(ev(i));
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

/// Verifies the defining axioms of a Morozova-Chentsov function on a grid:
/// symmetry, homogeneity of degree -1, the functional equation f(t)=t f(1/t),
/// the normalized diagonal c(x,x)=1/x, and matrix monotonicity of f on
/// sampled ordered Hermitian pairs of size <= 3. Failures are collected in
/// the report, never thrown.
inline PropertyReport check_axioms(const MCFunction& mc, const KernelGrid& grid,
                                   double tol, std::uint64_t seed = 20080220u,
                                   int monotonicity_samples = 32) {
  grid.validate();
  if (grid.points.empty()) throw DomainError("check_axioms: empty grid");
  PropertyReport rep;
  rep.suite = "axioms";
  rep.seed = seed;
  Rng rng(derive_seed(seed, 0x6178ULL));

  int idx = 0;
  char label[160];
  for (const auto& [x, y] : grid.points) {
    const double cxy = mc.c(x, y);
    const double cyx = mc.c(y, x);
    const double sym = std::fabs(cxy - cyx) / cxy;
    std::snprintf(label, sizeof label, "%s symmetry at (%g,%g)", mc.name().c_str(), x, y);
    rep.record(sym <= tol, sym, idx, label);

    const double s = rng.uniform(0.1, 10.0);
    const double hom = std::fabs(s * mc.c(s * x, s * y) - cxy) / cxy;
    std::snprintf(label, sizeof label, "%s homogeneity at (%g,%g) s=%g",
                  mc.name().c_str(), x, y, s);
    rep.record(hom <= tol, hom, idx, label);

    const double t = x / y;
    const double lhs = mc.f(t);
    const double rhs = t * mc.f(1.0 / t);
    const double feq = std::fabs(lhs - rhs) / std::fabs(lhs);
    std::snprintf(label, sizeof label, "%s functional equation at t=%g",
                  mc.name().c_str(), t);
    rep.record(feq <= tol, feq, idx, label);

    if (mc.normalized()) {
      const double diag = std::fabs(mc.c(x, x) - 1.0 / x) * x;
      std::snprintf(label, sizeof label, "%s diagonal at x=%g", mc.name().c_str(), x);
      rep.record(diag <= tol, diag, idx, label);
    }
    ++idx;
  }

  if (mc.normalized()) {
    const double norm = std::fabs(mc.c(1.0, 1.0) - 1.0);
    rep.record(norm <= tol, norm, idx++, mc.name() + " normalization c(1,1)=1");
  }

  // matrix monotonicity: A <= B with positive spectra implies f(A) <= f(B)
  auto f = [&mc](double t) { return mc.f(t); };
  for (int k = 0; k < monotonicity_samples; ++k) {
    const int n = 2 + static_cast<int>(rng.uniform() * 2.0);  // 2 or 3
    Eigen::MatrixXcd a = detail::random_hermitian(rng, n);
    // shift A into the strictly positive cone, then add a PSD increment
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(a);
    a += (std::fabs(ea.eigenvalues().minCoeff()) + 0.5) *
         Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd g = detail::random_hermitian(rng, n);
    Eigen::MatrixXcd b = a + g * g.adjoint();

    const Eigen::MatrixXcd diff =
        detail::matrix_function(b, f) - detail::matrix_function(a, f);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ed(diff);
    const double viol = std::max(0.0, -ed.eigenvalues().minCoeff());
    std::snprintf(label, sizeof label, "%s matrix monotonicity sample %d (n=%d)",
                  mc.name().c_str(), k, n);
    rep.record(viol <= tol, viol, idx++, label);
  }
  return rep;
}

}  // namespace qig
