#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qig {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derive an independent stream seed from (seed, stream); used to make
/// trials reproducible independently of execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x2545f4914f6cdd1dULL * (stream + 1));
  splitmix64(s);
  return s;
}

/// Minimal deterministic generator: splitmix64 driving uniform, Box-Muller
/// normal, and complex standard normal draws. Results are identical across
/// platforms for a given seed, unlike std::normal_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  double uniform() {  // (0,1)
    const std::uint64_t bits = splitmix64(state_);
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform(), u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  std::complex<double> cnormal() {
    const double re = normal();
    const double im = normal();
    return {re * 0.70710678118654752440, im * 0.70710678118654752440};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace qig
