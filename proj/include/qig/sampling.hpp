#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qig/errors.hpp"
#include "qig/random.hpp"
#include "qig/states.hpp"

namespace qig {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::vector<int> dims{2, 3, 4, 6};
  int trials = 100;
  double eigenvalue_floor = 1e-6;

  void validate() const {
    if (trials < 1) throw ParameterError("SamplerConfig: trials must be >= 1");
    for (int d : dims)
      if (d < 2) throw ParameterError("SamplerConfig: dims must each be >= 2");
  }
};

/// Deterministic source of random states, observables, unitaries and
/// channels. Every draw depends only on the seed and the call sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Matrix ginibre(int n) {
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng_.cnormal();
    return g;
  }

  Matrix hermitian(int n) {
    const Matrix g = ginibre(n);
    return 0.5 * (g + g.adjoint().eval());
  }

  /// GG*/tr(GG*) mixed toward 1/n so the smallest eigenvalue is at least
  /// `floor`.
  DensityMatrix density(int n, double floor = 1e-6) {
    if (n < 2) throw ParameterError("density: n must be >= 2");
    const Matrix g = ginibre(n);
    Matrix s = g * g.adjoint();
    s /= s.trace().real();
    const double tau = floor * n;
    Matrix mixed = (1.0 - tau) * s + (tau / n) * Matrix::Identity(n, n);
    return DensityMatrix((mixed + mixed.adjoint().eval()) * 0.5);
  }

  /// Rank-one projection of a normalized Gaussian vector.
  DensityMatrix pure(int n) {
    if (n < 2) throw ParameterError("pure: n must be >= 2");
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng_.cnormal();
    v.normalize();
    Matrix p = v * v.adjoint();
    return DensityMatrix((p + p.adjoint().eval()) * 0.5);
  }

  /// Pure state mixed toward 1/n with weight tau = floor * n; keeps the
  /// smallest eigenvalue at `floor` while staying within O(floor) of pure.
  DensityMatrix near_pure(int n, double floor = 1e-6) {
    const Matrix p = pure(n).matrix();
    const double tau = floor * n;
    Matrix mixed = (1.0 - tau) * p + (tau / n) * Matrix::Identity(n, n);
    return DensityMatrix((mixed + mixed.adjoint().eval()) * 0.5);
  }

  /// GUE-style Hermitian observable scaled to unit operator norm.
  Observable observable(int n) {
    Matrix h = hermitian(n);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    const double norm = std::max(std::fabs(es.eigenvalues().minCoeff()),
                                 std::fabs(es.eigenvalues().maxCoeff()));
    if (norm > 0.0) h /= norm;
    return Observable((h + h.adjoint().eval()) * 0.5);
  }

  /// Haar-distributed unitary via QR of a Ginibre matrix with the phase
  /// convention R_ii > 0.
  Matrix haar_unitary(int n) {
    const Matrix g = ginibre(n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
      const Complex rii = r(i, i);
      const double a = std::abs(rii);
      q.col(i) *= (a > 0.0) ? rii / a : Complex(1.0, 0.0);
    }
    return q;
  }

  /// Trace-preserving Kraus family: the n-column blocks of a Haar unitary on
  /// an n*env dimensional space form an isometry, hence sum K*K = 1.
  QuantumChannel random_channel(int n, int env) {
    if (env < 2) throw ParameterError("random_channel: env must be >= 2");
    const Matrix u = haar_unitary(n * env);
    std::vector<Matrix> kraus;
    kraus.reserve(env);
    for (int k = 0; k < env; ++k)
      kraus.push_back(u.block(k * n, 0, n, n));
    return QuantumChannel(std::move(kraus));
  }

  double uniform(double lo, double hi) { return rng_.uniform(lo, hi); }
  double normal() { return rng_.normal(); }

 private:
  Rng rng_;
};

}  // namespace qig
