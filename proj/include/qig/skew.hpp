#pragma once

#include <cmath>
#include <complex>

#include "qig/errors.hpp"
#include "qig/mc_function.hpp"
#include "qig/representation.hpp"
#include "qig/states.hpp"

namespace qig {

inline constexpr double kPositivityFloor = 1e-12;
inline constexpr double kNegativeClampTol = 1e-12;

namespace detail {

// eigenvalues below this (relative to trace 1) are treated as exact zeros in
// the continuous extensions d(t,0)=0 and f_lam(t,0)=0
inline constexpr double kZeroEigTol = 1e-12;

inline double clamp_nonnegative(double v, double scale, const char* what) {
  if (v < -kNegativeClampTol * std::max(1.0, scale))
    throw NumericError(std::string(what) + ": negative beyond clamping tolerance");
  return v < 0.0 ? 0.0 : v;
}

struct EigenFrame {
  RealVector eig;
  Matrix a_tilde;  // U* A U
  explicit EigenFrame(const DensityMatrix& rho, const Matrix& a) {
    SpectralDecomposition sd = spectral(rho.matrix());
    eig = std::move(sd.eigenvalues);
    a_tilde = sd.basis.adjoint() * a * sd.basis;
  }
};

}  // namespace detail

/// Monotone metric K_rho(A,B) = tr A* c(L_rho, R_rho) B, evaluated in the
/// eigenbasis of rho as a sum over the kernel c(eig_i, eig_j). Requires a
/// strictly positive definite state.
inline Complex metric(const MCFunction& mc, const DensityMatrix& rho,
                      const Matrix& a, const Matrix& b) {
  if (a.rows() != rho.dim() || b.rows() != rho.dim() || a.cols() != rho.dim() ||
      b.cols() != rho.dim())
    throw DimensionError("metric: dimension mismatch");
  SpectralDecomposition sd = spectral(rho.matrix());
  const Eigen::Index n = rho.dim();
  if (sd.eigenvalues(n - 1) <= kPositivityFloor)
    throw PositivityError("metric: state must be strictly positive definite");
  const Matrix at = sd.basis.adjoint() * a * sd.basis;
  const Matrix bt = sd.basis.adjoint() * b * sd.basis;
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      sum += std::conj(at(i, j)) * mc.c(sd.eigenvalues(i), sd.eigenvalues(j)) * bt(i, j);
  return sum;
}

/// Metric adjusted skew information via the representing function,
///   I = tr rho A^2 - m(c)/2 * sum d(eig_i, eig_j) |A~_ij|^2.
/// Zero eigenvalues are admitted through the continuous extension d(t,0)=0,
/// so singular (e.g. pure) states are valid inputs.
inline double skew_info(const MCFunction& mc, const DensityMatrix& rho,
                        const Observable& a) {
  const auto m = mc.metric_constant();
  if (!m) throw RegularityError("skew_info: metric is not regular: " + mc.name());
  if (a.dim() != rho.dim()) throw DimensionError("skew_info: dimension mismatch");
  const detail::EigenFrame fr(rho, a.matrix());
  const Eigen::Index n = rho.dim();
  const double tr_rho_a2 =
      (rho.matrix() * a.matrix() * a.matrix()).trace().real();
  double dsum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double li = fr.eig(i) <= detail::kZeroEigTol ? 0.0 : fr.eig(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double lj = fr.eig(j) <= detail::kZeroEigTol ? 0.0 : fr.eig(j);
      if (li == 0.0 || lj == 0.0) continue;  // d vanishes on the boundary
      dsum += mc.d(li, lj) * std::norm(fr.a_tilde(i, j));
    }
  }
  const double value = tr_rho_a2 - 0.5 * *m * dsum;
  return detail::clamp_nonnegative(value, std::fabs(tr_rho_a2), "skew_info");
}

/// Same quantity through the commutator representation
///   I = m(c)/2 * sum (eig_i - eig_j)^2 c(eig_i, eig_j) |A~_ij|^2,
/// which requires strict positivity.
inline double skew_info_commutator(const MCFunction& mc, const DensityMatrix& rho,
                                   const Observable& a) {
  const auto m = mc.metric_constant();
  if (!m)
    throw RegularityError("skew_info_commutator: metric is not regular: " + mc.name());
  if (a.dim() != rho.dim())
    throw DimensionError("skew_info_commutator: dimension mismatch");
  const detail::EigenFrame fr(rho, a.matrix());
  const Eigen::Index n = rho.dim();
  if (fr.eig(n - 1) <= kPositivityFloor)
    throw PositivityError("skew_info_commutator: state must be positive definite");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double diff = fr.eig(i) - fr.eig(j);
      if (diff == 0.0) continue;
      sum += diff * diff * mc.c(fr.eig(i), fr.eig(j)) * std::norm(fr.a_tilde(i, j));
    }
  return detail::clamp_nonnegative(0.5 * *m * sum, 1.0, "skew_info_commutator");
}

/// lambda-skew information I_lam = tr rho A^2 - sum f_lam(eig_i, eig_j)
/// |A~_ij|^2; pairs with a zero eigenvalue contribute nothing to the sum.
inline double lambda_skew_info(double lam, const DensityMatrix& rho,
                               const Observable& a) {
  if (!(lam > 0.0 && lam <= 1.0))
    throw ParameterError("lambda_skew_info: lambda must lie in (0,1]");
  if (a.dim() != rho.dim())
    throw DimensionError("lambda_skew_info: dimension mismatch");
  const detail::EigenFrame fr(rho, a.matrix());
  const Eigen::Index n = rho.dim();
  const double tr_rho_a2 =
      (rho.matrix() * a.matrix() * a.matrix()).trace().real();
  double fsum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double li = fr.eig(i) <= detail::kZeroEigTol ? 0.0 : fr.eig(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double lj = fr.eig(j) <= detail::kZeroEigTol ? 0.0 : fr.eig(j);
      if (li == 0.0 || lj == 0.0) continue;
      fsum += f_lambda(lam, li, lj) * std::norm(fr.a_tilde(i, j));
    }
  }
  return detail::clamp_nonnegative(tr_rho_a2 - fsum, std::fabs(tr_rho_a2),
                                   "lambda_skew_info");
}

/// Mixture route: I = m(c)/2 * integral of I_lam(rho,A) (1+lam)^2/lam
/// d mu_c(lam). Agrees with skew_info to quadrature accuracy for every
/// metric with a tabulated measure.
inline double mixture_skew_info(const MCFunction& mc, const DensityMatrix& rho,
                                const Observable& a,
                                const QuadratureConfig& cfg = {}) {
  const auto m = mc.metric_constant();
  if (!m)
    throw RegularityError("mixture_skew_info: metric is not regular: " + mc.name());
  const RepresentingMeasure mu = measure_of(mc);
  const detail::EigenFrame fr(rho, a.matrix());
  const Eigen::Index n = rho.dim();
  const double tr_rho_a2 =
      (rho.matrix() * a.matrix() * a.matrix()).trace().real();
  // I_lam as a cheap kernel sum over the precomputed frame
  auto i_lam = [&](double lam) {
    double fsum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double li = fr.eig(i) <= detail::kZeroEigTol ? 0.0 : fr.eig(i);
      for (Eigen::Index j = 0; j < n; ++j) {
        const double lj = fr.eig(j) <= detail::kZeroEigTol ? 0.0 : fr.eig(j);
        if (li == 0.0 || lj == 0.0) continue;
        fsum += f_lambda(lam, li, lj) * std::norm(fr.a_tilde(i, j));
      }
    }
    return tr_rho_a2 - fsum;
  };
  // I_lam vanishes linearly at lam=0, cancelling the 1/lam weight
  const double integral = mu.integrate_against(
      [&](double lam) {
        return i_lam(lam) * (1.0 + lam) * (1.0 + lam) / lam;
      },
      cfg, -1.0);
  return detail::clamp_nonnegative(0.5 * *m * integral, std::fabs(tr_rho_a2),
                                   "mixture_skew_info");
}

/// Var_rho(A) = tr rho A^2 - (tr rho A)^2.
inline double variance(const DensityMatrix& rho, const Observable& a) {
  if (a.dim() != rho.dim()) throw DimensionError("variance: dimension mismatch");
  const double tr_rho_a2 =
      (rho.matrix() * a.matrix() * a.matrix()).trace().real();
  const double tr_rho_a = (rho.matrix() * a.matrix()).trace().real();
  return detail::clamp_nonnegative(tr_rho_a2 - tr_rho_a * tr_rho_a,
                                   std::fabs(tr_rho_a2), "variance");
}

/// Metric adjusted correlation
///   Corr(A,B) = tr rho A*B - m(c)/2 * tr A* d(L_rho, R_rho) B.
/// Sesquilinear; its diagonal on self-adjoint arguments is the skew
/// information. Uses the same boundary extension of d as skew_info.
inline Complex correlation(const MCFunction& mc, const DensityMatrix& rho,
                           const Matrix& a, const Matrix& b) {
  const auto m = mc.metric_constant();
  if (!m) throw RegularityError("correlation: metric is not regular: " + mc.name());
  if (a.rows() != rho.dim() || b.rows() != rho.dim() || a.cols() != rho.dim() ||
      b.cols() != rho.dim())
    throw DimensionError("correlation: dimension mismatch");
  SpectralDecomposition sd = spectral(rho.matrix());
  const Eigen::Index n = rho.dim();
  const Matrix at = sd.basis.adjoint() * a * sd.basis;
  const Matrix bt = sd.basis.adjoint() * b * sd.basis;
  const Complex tr_rho_ab = (rho.matrix() * a.adjoint() * b).trace();
  Complex dsum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double li = sd.eigenvalues(i) <= detail::kZeroEigTol ? 0.0 : sd.eigenvalues(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double lj = sd.eigenvalues(j) <= detail::kZeroEigTol ? 0.0 : sd.eigenvalues(j);
      if (li == 0.0 || lj == 0.0) continue;
      dsum += std::conj(at(i, j)) * mc.d(li, lj) * bt(i, j);
    }
  }
  return tr_rho_ab - 0.5 * *m * dsum;
}

}  // namespace qig
