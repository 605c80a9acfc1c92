#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace qig {
namespace detail {

// One iterated-Aitken pass; entries whose denominator is at roundoff level
// are carried through unchanged.
inline std::vector<double> aitken_row(const std::vector<double>& s) {
  std::vector<double> out;
  out.reserve(s.size() - 2);
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    const double d1 = s[i + 1] - s[i];
    const double d2 = s[i + 2] - s[i + 1];
    const double den = d2 - d1;
    if (std::fabs(den) <= 1e-14 * (std::fabs(s[i + 2]) + 1e-300)) {
      out.push_back(s[i + 2]);
    } else {
      out.push_back(s[i + 2] - d2 * d2 / den);
    }
  }
  return out;
}

}  // namespace detail

/// Iterated Aitken delta-squared acceleration; returns the deepest entry.
inline double aitken_limit(std::vector<double> seq) {
  double best = seq.empty() ? 0.0 : seq.back();
  while (seq.size() >= 3) {
    seq = detail::aitken_row(seq);
    if (!seq.empty()) best = seq.back();
  }
  return best;
}

/// Numeric limit of f(t) for t -> 0+ sampled along the geometric ladder
/// t_k = anchor * 10^{-k}. Returns nullopt when the limit is classified as
/// zero: either the accelerated estimate falls below `zero_threshold`, or the
/// raw tail is still far from the estimate while 1/f grows linearly in k
/// (logarithmic divergence of 1/f, e.g. f(t) ~ 1/log(1/t)).
template <class F>
std::optional<double> limit_at_zero(F&& f, double anchor = 1e-6,
                                    int max_decades = 74,
                                    double zero_threshold = 1e-10) {
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(max_decades) + 1);
  double t = anchor;
  for (int k = 0; k <= max_decades; ++k, t *= 0.1) {
    const double fk = f(t);
    if (!std::isfinite(fk)) break;
    vals.push_back(fk);
    // raw convergence: two consecutive machine-level agreements
    const std::size_t n = vals.size();
    if (n >= 3 &&
        std::fabs(vals[n - 1] - vals[n - 2]) <= 1e-14 * std::fabs(vals[n - 1]) &&
        std::fabs(vals[n - 2] - vals[n - 3]) <= 1e-14 * std::fabs(vals[n - 2]))
      break;
  }
  if (vals.empty()) return std::nullopt;
  const double raw_tail = vals.back();
  const double est = aitken_limit(vals);
  if (!(est > zero_threshold)) return std::nullopt;
  if (std::fabs(raw_tail - est) > 0.5 * std::fabs(est)) {
    // Extrapolation not trusted; decide by the growth pattern of 1/f.
    // An arithmetic (straight-line) growth of 1/f per decade means f -> 0.
    const std::size_t n = vals.size();
    const std::size_t window = n < 22 ? n : 22;
    double slope_sum = 0.0, curv_sum = 0.0;
    int m = 0;
    for (std::size_t i = n - window; i + 2 < n; ++i, ++m) {
      const double r0 = 1.0 / vals[i], r1 = 1.0 / vals[i + 1],
                   r2 = 1.0 / vals[i + 2];
      slope_sum += std::fabs(r1 - r0);
      curv_sum += std::fabs((r2 - r1) - (r1 - r0));
    }
    if (m > 0 && slope_sum > 0.0 && curv_sum / slope_sum < 1e-4)
      return std::nullopt;
  }
  return est;
}

}  // namespace qig
