#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qig/errors.hpp"

namespace qig {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  bool endpoint_substitution = true;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae/weights on [-1,1]; node 7 is the centre.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kGk15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kG7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b, value, error;
};

template <class F>
Panel gk15_panel(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k15 = kGk15Weights[7] * fc;
  double g7 = kG7Weights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double off = h * kGk15Nodes[i];
    const double fi = f(c + off) + f(c - off);
    k15 += kGk15Weights[i] * fi;
    if (i % 2 == 1) g7 += kG7Weights[i / 2] * fi;
  }
  double err = 200.0 * std::fabs(k15 - g7);
  err *= std::sqrt(err);
  return {a, b, k15 * h, err * std::fabs(h)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a,b]. The worst panel is
/// bisected until the summed error estimate meets the tolerances or the
/// subdivision budget runs out (then QuadratureError with the achieved error).
template <class F>
QuadratureResult integrate(const F& f, double a, double b,
                           const QuadratureConfig& cfg = {}) {
  std::vector<detail::Panel> panels;
  panels.reserve(64);
  panels.push_back(detail::gk15_panel(f, a, b));
  int splits = 0;
  for (;;) {
    double total = 0.0, err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)))
      return {total, err, splits};
    if (splits >= cfg.max_subdivisions)
      throw QuadratureError("adaptive quadrature did not converge", err);
    const detail::Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b))  // panel no longer splittable
      throw QuadratureError("adaptive quadrature stalled on a panel", err);
    panels[worst] = detail::gk15_panel(f, p.a, mid);
    panels.push_back(detail::gk15_panel(f, mid, p.b));
    ++splits;
  }
}

/// Integral over (0, upper) of w(t)*phi(t) dt where w ~ t^alpha near zero,
/// alpha > -1. Substitutes t = u^s with s = 2/(1+alpha) so the transformed
/// integrand vanishes linearly at u = 0.
template <class F>
QuadratureResult integrate_power_endpoint(const F& integrand, double alpha,
                                          double upper,
                                          const QuadratureConfig& cfg = {}) {
  if (!(alpha > -1.0)) throw DomainError("endpoint exponent must exceed -1");
  if (!cfg.endpoint_substitution || alpha >= 1.0) {
    return integrate(integrand, 0.0, upper, cfg);
  }
  const double s = 2.0 / (1.0 + alpha);
  const double u_hi = std::pow(upper, 1.0 / s);
  auto g = [&](double u) {
    const double t = std::pow(u, s);
    return integrand(t) * s * std::pow(u, s - 1.0);
  };
  return integrate(g, 0.0, u_hi, cfg);
}

}  // namespace qig
