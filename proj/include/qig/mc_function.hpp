#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>

#include "qig/errors.hpp"
#include "qig/extrapolation.hpp"

namespace qig {

enum class MetricFamily { Wyd, Bures, Kubo, Bridge, Extreme, VariantBridge };

/// Extreme Morozova-Chentsov function
///   c_lam(x,y) = (1+lam)/2 * (1/(x+lam y) + 1/(lam x + y)),  lam in [0,1].
inline double extreme_c(double lam, double x, double y) {
  return 0.5 * (1.0 + lam) * (1.0 / (x + lam * y) + 1.0 / (lam * x + y));
}

/// f_lam(x,y) = x*y*c_lam(x,y); vanishes continuously when x or y hits zero.
inline double f_lambda(double lam, double x, double y) {
  if (lam < 0.0 || lam > 1.0) throw ParameterError("f_lambda: lambda outside [0,1]");
  if (x < 0.0 || y < 0.0) throw DomainError("f_lambda: negative argument");
  if (x == 0.0 || y == 0.0) return 0.0;
  const double xy = x * y;
  return 0.5 * (1.0 + lam) * (xy / (x + lam * y) + xy / (lam * x + y));
}

/// Operator monotone function of the variant bridge,
///   f_p(t) = (1+t)/2 * Q(p,t)^p,
///   Q(p,t) = 4(1-p+t)(1+(1-p)t) / ((2-p)^2 (1+t)^2).
inline double variant_bridge_f(double p, double t) {
  const double q = 4.0 * (1.0 - p + t) * (1.0 + (1.0 - p) * t) /
                   ((2.0 - p) * (2.0 - p) * (1.0 + t) * (1.0 + t));
  return 0.5 * (1.0 + t) * std::pow(q, p);
}

/// Closed-form partial derivative of variant_bridge_f with respect to p.
/// Writing f = (1+t)/2 * Q^p, the derivative is f * (log Q + p dlogQ/dp) with
/// dlogQ/dp = -p(1-t)^2 / ((1-p+t)(1+(1-p)t)(2-p)); strictly negative for
/// p in (0,1] and t != 1.
inline double variant_bridge_df_dp(double p, double t) {
  const double a = 1.0 - p + t;
  const double b = 1.0 + (1.0 - p) * t;
  const double c2 = 2.0 - p;
  const double q = 4.0 * a * b / (c2 * c2 * (1.0 + t) * (1.0 + t));
  const double dlogq = -p * (1.0 - t) * (1.0 - t) / (a * b * c2);
  return variant_bridge_f(p, t) * (std::log(q) + p * dlogq);
}

namespace detail {

// g(t) = c(t,1) per family, evaluated for t in (0, 1]. All builtins are
// normalized, so g(1) = 1.

inline double wyd_g(double p, double t) {
  const double u = t - 1.0;
  if (std::fabs(u) <= 1e-4) {
    // series about the diagonal; cancellation-free
    const double pp = p * p - p;
    return 1.0 + u * (-0.5 + u * ((pp + 4.0) / 12.0 - u * (pp + 2.0) / 8.0));
  }
  const double lt = std::log(t);
  return std::expm1(p * lt) * std::expm1((1.0 - p) * lt) /
         (p * (1.0 - p) * u * u);
}

inline double kubo_g(double t) {
  const double u = t - 1.0;
  if (std::fabs(u) <= 1e-4) {
    return 1.0 + u * (-0.5 + u * (1.0 / 3.0 - u * 0.25));
  }
  return std::log(t) / u;
}

inline double bridge_g(double gamma, double t) {
  return std::pow(t, -gamma) * std::pow(0.5 * (1.0 + t), 2.0 * gamma - 1.0);
}

}  // namespace detail

/// A Morozova-Chentsov function: symmetric, homogeneous of degree -1,
/// c(x,y) = 1/(y f(x/y)) with f operator monotone and f(t) = t f(1/t).
/// Instances are immutable; every member is safe to call concurrently.
class MCFunction {
 public:
  static MCFunction wyd(double p) {
    if (!(p > 0.0 && p < 1.0))
      throw ParameterError("wyd: p must lie strictly inside (0,1)");
    return MCFunction(MetricFamily::Wyd, p, "wyd(p=" + fmt(p) + ")");
  }
  static MCFunction wy() { return MCFunction(MetricFamily::Wyd, 0.5, "wy"); }
  static MCFunction bures() { return MCFunction(MetricFamily::Bures, 0.0, "bures"); }
  static MCFunction kubo() { return MCFunction(MetricFamily::Kubo, 0.0, "kubo"); }
  static MCFunction bridge(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
      throw ParameterError("bridge: gamma must lie in [0,1]");
    return MCFunction(MetricFamily::Bridge, gamma, "bridge(gamma=" + fmt(gamma) + ")");
  }
  static MCFunction extreme(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
      throw ParameterError("extreme: lambda must lie in [0,1]");
    return MCFunction(MetricFamily::Extreme, lambda, "extreme(lambda=" + fmt(lambda) + ")");
  }
  static MCFunction variant_bridge(double p) {
    if (!(p >= 0.0 && p <= 1.0))
      throw ParameterError("variant_bridge: p must lie in [0,1]");
    return MCFunction(MetricFamily::VariantBridge, p, "variant-bridge(p=" + fmt(p) + ")");
  }

  /// c(x,y). Arguments are rescaled by the larger one before evaluation so a
  /// single well-conditioned branch g(t), t in (0,1], serves all magnitudes.
  double c(double x, double y) const {
    if (!(x > 0.0) || !(y > 0.0))
      throw DomainError("MCFunction: arguments must be strictly positive");
    return c_clean(x, y) + fault_offset_;
  }

  /// c_hat(x,y) = (x-y)^2 c(x,y), extended continuously to the closed
  /// quadrant: c_hat(x,x) = 0 exactly, c_hat(t,0) = t/m(c) for regular
  /// metrics (infinite otherwise).
  double c_hat(double x, double y) const {
    if (x < 0.0 || y < 0.0) throw DomainError("c_hat: negative argument");
    if (x == y) return fault_offset_;
    if (x == 0.0 || y == 0.0) {
      if (regular()) return (x + y) / *metric_constant() + fault_offset_;
      return std::numeric_limits<double>::infinity();
    }
    const double d = x - y;
    return d * d * c_clean(x, y) + fault_offset_;
  }

  /// Representing function d_c(x,y) = (x+y)/m(c) - c_hat(x,y) of a regular
  /// metric, with the continuous extension d(t,0) = d(0,t) = 0.
  double d(double x, double y) const {
    const auto m = metric_constant();
    if (!m) throw RegularityError("d: metric is not regular: " + name_);
    if (x < 0.0 || y < 0.0) throw DomainError("d: negative argument");
    if (x == 0.0 || y == 0.0) return fault_offset_;
    const double diff = x - y;
    return (x + y) / *m - diff * diff * c_clean(x, y) + fault_offset_;
  }

  /// g(t) = c(t,1) and the operator monotone representative f = 1/g.
  double g(double t) const { return c(t, 1.0); }
  double f(double t) const { return 1.0 / c(t, 1.0); }

  /// Closed-form metric constant m(c) = lim_{t->0} 1/c(t,1);
  /// nullopt for non-regular metrics.
  std::optional<double> metric_constant() const {
    switch (family_) {
      case MetricFamily::Wyd:
        return param_ * (1.0 - param_);
      case MetricFamily::Bures:
        return 0.5;
      case MetricFamily::Kubo:
        return std::nullopt;
      case MetricFamily::Bridge:
        if (param_ == 0.0) return 0.5;
        return std::nullopt;
      case MetricFamily::Extreme:
        if (param_ == 0.0) return std::nullopt;
        return 2.0 * param_ / ((1.0 + param_) * (1.0 + param_));
      case MetricFamily::VariantBridge:
        if (param_ == 1.0) return std::nullopt;
        return 0.5 * std::pow(4.0 * (1.0 - param_) / ((2.0 - param_) * (2.0 - param_)),
                              param_);
    }
    return std::nullopt;
  }

  bool regular() const { return metric_constant().has_value(); }
  bool normalized() const { return true; }  // every builtin has c(1,1) = 1

  /// Analytic continuation of c(z,1) off the closed negative half-axis,
  /// principal branches throughout. Used by the boundary-value measure oracle.
  std::complex<double> continued_g(std::complex<double> z) const {
    using cd = std::complex<double>;
    cd value;
    switch (family_) {
      case MetricFamily::Wyd: {
        const double p = param_;
        value = (std::pow(z, p) - 1.0) * (std::pow(z, 1.0 - p) - 1.0) /
                (p * (1.0 - p) * (z - 1.0) * (z - 1.0));
        break;
      }
      case MetricFamily::Bures:
        value = 2.0 / (z + 1.0);
        break;
      case MetricFamily::Kubo:
        value = std::log(z) / (z - 1.0);
        break;
      case MetricFamily::Bridge:
        value = std::pow(z, -param_) * std::pow(0.5 * (z + 1.0), 2.0 * param_ - 1.0);
        break;
      case MetricFamily::Extreme:
        value = 0.5 * (1.0 + param_) *
                (1.0 / (z + param_) + 1.0 / (param_ * z + 1.0));
        break;
      case MetricFamily::VariantBridge: {
        const double p = param_;
        value = std::pow(2.0 - p, 2.0 * p) /
                    (std::pow(z + (1.0 - p), p) * std::pow((1.0 - p) * z + 1.0, p)) *
                std::pow(0.5 * (z + 1.0), 2.0 * p - 1.0);
        break;
      }
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
      throw ContinuationError("continued_g: non-finite continuation for " + name_);
    return value + fault_offset_;
  }

  MetricFamily family() const { return family_; }
  double param() const { return param_; }
  const std::string& name() const { return name_; }
  double fault_offset() const { return fault_offset_; }

  /// Copy of this metric with every kernel surface (c, c_hat, d, the
  /// continuation) shifted by a constant. Breaks the defining identities on
  /// purpose; used by the fault-injection suites.
  MCFunction perturbed(double offset) const {
    MCFunction m = *this;
    m.fault_offset_ += offset;
    m.name_ = name_ + "+" + fmt(offset);
    return m;
  }

 private:
  MCFunction(MetricFamily fam, double param, std::string name)
      : family_(fam), param_(param), name_(std::move(name)) {}

  double c_clean(double x, double y) const {
    const double hi = x > y ? x : y;
    const double lo = x > y ? y : x;
    return g_unit(lo / hi) / hi;
  }

  double g_unit(double t) const {
    switch (family_) {
      case MetricFamily::Wyd:
        return detail::wyd_g(param_, t);
      case MetricFamily::Bures:
        return 2.0 / (1.0 + t);
      case MetricFamily::Kubo:
        return detail::kubo_g(t);
      case MetricFamily::Bridge:
        return detail::bridge_g(param_, t);
      case MetricFamily::Extreme:
        return extreme_c(param_, t, 1.0);
      case MetricFamily::VariantBridge:
        return 1.0 / variant_bridge_f(param_, t);
    }
    return 0.0;
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
  }

  MetricFamily family_;
  double param_;
  std::string name_;
  double fault_offset_ = 0.0;
};

/// Numeric metric constant: the limit of f(t) = 1/c(t,1) along the decade
/// ladder anchored at {1e-6, 1e-7, 1e-8, ...}, Aitken-accelerated. nullopt
/// when the extrapolated limit is below 1e-10 or 1/f diverges logarithmically.
inline std::optional<double> metric_constant_extrapolated(const MCFunction& mc) {
  return limit_at_zero([&mc](double t) { return mc.f(t); });
}

}  // namespace qig
