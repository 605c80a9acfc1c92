#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qig/errors.hpp"
#include "qig/mc_function.hpp"
#include "qig/quadrature.hpp"

namespace qig {

inline constexpr double kPi = 3.14159265358979323846;

struct Atom {
  double location;  // in [0,1]
  double mass;      // > 0
};

/// Representing measure of the canonical decomposition
///   c(x,y) = integral over [0,1] of c_lam(x,y) d mu_c(lam):
/// an absolutely continuous part (density on (0,1)) plus point atoms.
/// endpoint_exponents (a,b) describe density ~ lam^a near 0 and
/// ~ (1-lam)^b near 1; both exceed -1 so the mass is finite.
class RepresentingMeasure {
 public:
  RepresentingMeasure(std::function<double(double)> density, double exp0,
                      double exp1, std::vector<Atom> atoms = {})
      : density_(std::move(density)), atoms_(std::move(atoms)),
        exp0_(exp0), exp1_(exp1) {
    if (!(exp0_ > -1.0) || !(exp1_ > -1.0))
      throw DomainError("RepresentingMeasure: endpoint exponents must exceed -1");
  }

  static RepresentingMeasure pure_atom(double location, double mass) {
    return RepresentingMeasure(nullptr, 0.0, 0.0, {{location, mass}});
  }

  bool has_density() const { return static_cast<bool>(density_); }
  double density(double lam) const {
    if (!(lam > 0.0 && lam < 1.0))
      throw DomainError("density: lambda must lie in (0,1)");
    return density_ ? density_(lam) : 0.0;
  }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::pair<double, double> endpoint_exponents() const { return {exp0_, exp1_}; }

  /// Integral of phi against the measure. phi_exp0 declares phi's own power
  /// behaviour at lam -> 0 (e.g. -1 for the (1+lam)^2/lam weights) so the
  /// endpoint substitution can absorb the combined singularity. lower_cutoff
  /// restricts the absolutely continuous part to (cutoff, 1).
  double integrate_against(const std::function<double(double)>& phi,
                           const QuadratureConfig& cfg = {},
                           double phi_exp0 = 0.0, double lower_cutoff = 0.0) const {
    double total = 0.0;
    for (const auto& atom : atoms_)
      if (atom.location >= lower_cutoff) total += atom.mass * phi(atom.location);
    if (!density_) return total;

    const double split = 0.5;
    auto weighted = [this, &phi](double lam) { return density_(lam) * phi(lam); };

    if (lower_cutoff >= split) {
      total += integrate(weighted, lower_cutoff, 1.0, cfg).value;
      return total;
    }
    // left piece: power substitution for the combined exponent at 0
    const double a = exp0_ + phi_exp0;
    if (lower_cutoff > 0.0) {
      total += integrate(weighted, lower_cutoff, split, cfg).value;
    } else {
      total += integrate_power_endpoint(weighted, a, split, cfg).value;
    }
    // right piece: mirror so the (1-lam)^exp1 endpoint sits at 0
    auto mirrored = [&weighted](double v) { return weighted(1.0 - v); };
    total += integrate_power_endpoint(mirrored, exp1_, split, cfg).value;
    return total;
  }

  /// Total mass; equals 1 for the measures of normalized metrics.
  double total_mass(const QuadratureConfig& cfg = {}) const {
    return integrate_against([](double) { return 1.0; }, cfg);
  }

 private:
  std::function<double(double)> density_;
  std::vector<Atom> atoms_;
  double exp0_, exp1_;
};

/// Exponential representation: c(x,y) = C0/(x+y) * exp of the integral of
/// (1-lam^2)/(lam^2+1) * (x^2+y^2)/((x+lam y)(lam x+y)) * h(lam) d lam.
struct HRepresentation {
  double C0 = 0.0;
  std::function<double(double)> h;  // (0,1) -> [0,1]
};

/// Tabulated representing measure for the builtin metrics.
inline RepresentingMeasure measure_of(const MCFunction& mc) {
  switch (mc.family()) {
    case MetricFamily::Wyd: {
      const double p = mc.param();
      const double scale = 2.0 * std::sin(p * kPi) / (kPi * p * (1.0 - p));
      return RepresentingMeasure(
          [p, scale](double lam) {
            return scale * (std::pow(lam, p) + std::pow(lam, 1.0 - p)) /
                   std::pow(1.0 + lam, 3);
          },
          std::min(p, 1.0 - p), 0.0);
    }
    case MetricFamily::Kubo:
      return RepresentingMeasure(
          [](double lam) { return 2.0 / ((1.0 + lam) * (1.0 + lam)); }, 0.0, 0.0);
    case MetricFamily::Bures:
      return RepresentingMeasure::pure_atom(1.0, 1.0);
    case MetricFamily::Bridge: {
      const double g = mc.param();
      if (g == 0.0) return RepresentingMeasure::pure_atom(1.0, 1.0);
      if (g == 1.0) return RepresentingMeasure::pure_atom(0.0, 1.0);
      const double scale = 2.0 * std::sin(g * kPi) / kPi;
      return RepresentingMeasure(
          [g, scale](double lam) {
            return scale / (1.0 + lam) * std::pow(lam, -g) *
                   std::pow(0.5 * (1.0 - lam), 2.0 * g - 1.0);
          },
          -g, 2.0 * g - 1.0);
    }
    case MetricFamily::Extreme:
      return RepresentingMeasure::pure_atom(mc.param(), 1.0);
    case MetricFamily::VariantBridge:
      throw UnsupportedMetricError("measure_of: no tabulated measure for " + mc.name());
  }
  throw UnsupportedMetricError("measure_of: unknown metric");
}

/// Quadrature reconstruction of c(x,y) from a representing measure.
inline double reconstruct_from_measure(const RepresentingMeasure& measure,
                                       double x, double y,
                                       const QuadratureConfig& cfg = {}) {
  if (!(x > 0.0) || !(y > 0.0))
    throw DomainError("reconstruct_from_measure: arguments must be positive");
  return measure.integrate_against(
      [x, y](double lam) { return extreme_c(lam, x, y); }, cfg);
}

/// Tabulated (C0, h) pairs of the exponential representation. The arctangent
/// in the tables is resolved into (0, pi) with a two-argument arctangent;
/// the numerators are positive on (0,1) so the angle stays in that range.
inline HRepresentation h_repr_of(const MCFunction& mc) {
  switch (mc.family()) {
    case MetricFamily::Wyd: {
      const double p = mc.param();
      const double c0 = std::sqrt(2.0) / (p * (1.0 - p)) *
                        std::sqrt(1.0 - std::cos(p * kPi / 2.0)) *
                        std::sqrt(1.0 - std::cos((1.0 - p) * kPi / 2.0));
      return {c0, [p](double lam) {
                const double lp = std::pow(lam, p);
                const double lq = std::pow(lam, 1.0 - p);
                const double num = (lp + lq) * std::sin(p * kPi);
                const double den = 1.0 - lam - (lp - lq) * std::cos(p * kPi);
                return std::atan2(num, den) / kPi;
              }};
    }
    case MetricFamily::Kubo:
      return {kPi / 2.0, [](double lam) {
                return 0.5 - std::atan(-std::log(lam) / kPi) / kPi;
              }};
    case MetricFamily::Bures:
      return {2.0, [](double) { return 0.0; }};
    case MetricFamily::Bridge: {
      const double g = mc.param();
      return {std::pow(2.0, 1.0 - g), [g](double) { return g; }};
    }
    default:
      throw UnsupportedMetricError("h_repr_of: no tabulated h for " + mc.name());
  }
}

/// Kernel of the exponential representation.
inline double h_kernel(double lam, double x, double y) {
  return (1.0 - lam * lam) / (lam * lam + 1.0) * (x * x + y * y) /
         ((x + lam * y) * (lam * x + y));
}

/// Reconstruction of c(x,y) from an exponential representation.
inline double reconstruct_from_h(const HRepresentation& hr, double x, double y,
                                 const QuadratureConfig& cfg = {}) {
  if (!(x > 0.0) || !(y > 0.0))
    throw DomainError("reconstruct_from_h: arguments must be positive");
  auto integrand = [&](double lam) { return h_kernel(lam, x, y) * hr.h(lam); };
  // sqrt substitution on the left half smooths fractional powers of h at 0
  double left;
  if (cfg.endpoint_substitution) {
    auto sub = [&](double u) { return integrand(u * u) * 2.0 * u; };
    left = integrate(sub, 0.0, std::sqrt(0.5), cfg).value;
  } else {
    left = integrate(integrand, 0.0, 0.5, cfg).value;
  }
  const double right = integrate(integrand, 0.5, 1.0, cfg).value;
  return hr.C0 / (x + y) * std::exp(left + right);
}

/// Boundary-value oracle for the measure density: 1/pi times the imaginary
/// part of -c(z,1) as z -> -lam from the upper half plane, converted to the
/// canonical-representation density through d mu_c = 2/(1+lam) d mu. One
/// Richardson step in epsilon removes the leading linear bias.
inline double boundary_density_oracle(const MCFunction& mc, double lam,
                                      double eps = 1e-6) {
  if (!(lam > 0.0 && lam < 1.0))
    throw DomainError("boundary_density_oracle: lambda must lie in (0,1)");
  if (!(eps > 0.0)) throw DomainError("boundary_density_oracle: eps must be positive");
  auto density_at = [&](double e) {
    const std::complex<double> z(-lam, e);
    return 2.0 / (1.0 + lam) * std::imag(-mc.continued_g(z)) / kPi;
  };
  const double d1 = density_at(eps);
  const double d2 = density_at(2.0 * eps);
  return 2.0 * d1 - d2;
}

/// Integral of (1+lam)^2/(2 lam) against the measure, restricted to
/// (lower_cutoff, 1]. For a regular metric this converges to 1/m(c) as the
/// cutoff shrinks; for the Kubo measure it grows like log(1/cutoff).
inline double metric_constant_integral(const RepresentingMeasure& measure,
                                       double lower_cutoff = 0.0,
                                       const QuadratureConfig& cfg = {}) {
  return measure.integrate_against(
      [](double lam) { return (1.0 + lam) * (1.0 + lam) / (2.0 * lam); }, cfg,
      -1.0, lower_cutoff);
}

}  // namespace qig
