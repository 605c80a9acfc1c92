#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qig/errors.hpp"

namespace qig {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloorTol = 1e-12;
inline constexpr double kKrausTol = 1e-10;

namespace detail {

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline void require_hermitian(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw DimensionError(std::string(what) + ": matrix not square");
  const double scale = std::max(1.0, max_abs(m));
  if (max_abs(m - m.adjoint().eval()) > kHermitianTol * scale)
    throw DomainError(std::string(what) + ": matrix not Hermitian to 1e-12");
}

}  // namespace detail

/// Eigenvalues (descending) and an orthonormal eigenbasis of a Hermitian
/// matrix; the columns of `basis` are the eigenvectors. This is the
/// computational realization of functions of the commuting left/right
/// multiplication pair: a kernel k acts entrywise as k(eig_i, eig_j) in
/// this basis.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix basis;

  Matrix reconstruct() const {
    return basis * eigenvalues.asDiagonal() * basis.adjoint();
  }
};

inline SpectralDecomposition spectral(const Matrix& m) {
  detail::require_hermitian(m, "spectral");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success)
    throw NumericError("spectral: eigensolver failed to converge");
  const Eigen::Index n = m.rows();
  SpectralDecomposition sd;
  sd.eigenvalues = RealVector(n);
  sd.basis = Matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {  // Eigen sorts ascending; flip
    sd.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    sd.basis.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return sd;
}

/// Self-adjoint matrix representing a physical observable.
class Observable {
 public:
  explicit Observable(Matrix m) : m_(std::move(m)) {
    detail::require_hermitian(m_, "Observable");
  }
  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// Hermitian, unit-trace, positive semidefinite (to 1e-12) state on a
/// system of dimension at least 2.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() < 2) throw DimensionError("DensityMatrix: dim must be >= 2");
    detail::require_hermitian(m_, "DensityMatrix");
    const double tr = m_.trace().real();
    if (std::fabs(tr - 1.0) > kTraceTol || std::fabs(m_.trace().imag()) > kTraceTol)
      throw DomainError("DensityMatrix: trace must equal 1 to 1e-12");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kEigenvalueFloorTol)
      throw DomainError("DensityMatrix: negative eigenvalue beyond 1e-12");
  }
  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

inline DensityMatrix diagonal_density(std::initializer_list<double> probs) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(probs.size()),
                          static_cast<Eigen::Index>(probs.size()));
  Eigen::Index i = 0;
  for (double p : probs) m(i, i) = p, ++i;
  return DensityMatrix(std::move(m));
}

inline Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Matrix sigma_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}
inline Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Tensor aggregation of two isolated systems: the product state and the
/// additive conserved quantity A1 x 1 + 1 x A2.
inline std::pair<DensityMatrix, Observable> aggregate(const DensityMatrix& rho1,
                                                      const DensityMatrix& rho2,
                                                      const Observable& a1,
                                                      const Observable& a2) {
  if (rho1.dim() != a1.dim() || rho2.dim() != a2.dim())
    throw DimensionError("aggregate: state/observable dimensions differ");
  Matrix rho = kron(rho1.matrix(), rho2.matrix());
  Matrix a = kron(a1.matrix(), Matrix::Identity(rho2.dim(), rho2.dim())) +
             kron(Matrix::Identity(rho1.dim(), rho1.dim()), a2.matrix());
  return {DensityMatrix(std::move(rho)), Observable(std::move(a))};
}

/// Unitary evolution rho -> e^{itH} rho e^{-itH} via spectral exponentiation.
inline DensityMatrix evolve(const DensityMatrix& rho, const Observable& h, double t) {
  if (rho.dim() != h.dim()) throw DimensionError("evolve: dimension mismatch");
  const SpectralDecomposition sd = spectral(h.matrix());
  const Eigen::Index n = rho.dim();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::exp(Complex(0.0, t * sd.eigenvalues(i)));
  Matrix u = sd.basis * phases.asDiagonal() * sd.basis.adjoint();
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

/// Completely positive trace-preserving map in Kraus form; trace
/// preservation (sum K*K = 1) is checked to 1e-10, complete positivity is
/// structural.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw DomainError("QuantumChannel: empty Kraus set");
    const Eigen::Index in = kraus_.front().cols();
    const Eigen::Index out = kraus_.front().rows();
    Matrix sum = Matrix::Zero(in, in);
    for (const auto& k : kraus_) {
      if (k.cols() != in || k.rows() != out)
        throw DimensionError("QuantumChannel: inconsistent Kraus shapes");
      sum += k.adjoint() * k;
    }
    if (detail::max_abs(sum - Matrix::Identity(in, in)) > kKrausTol)
      throw DomainError("QuantumChannel: Kraus set is not trace preserving");
  }

  const std::vector<Matrix>& kraus_operators() const { return kraus_; }
  Eigen::Index input_dim() const { return kraus_.front().cols(); }
  Eigen::Index output_dim() const { return kraus_.front().rows(); }

  Matrix apply(const Matrix& m) const {
    if (m.rows() != input_dim() || m.cols() != input_dim())
      throw DimensionError("QuantumChannel: input dimension mismatch");
    Matrix out = Matrix::Zero(output_dim(), output_dim());
    for (const auto& k : kraus_) out += k * m * k.adjoint();
    return out;
  }

  static QuantumChannel identity(Eigen::Index n) {
    return QuantumChannel({Matrix::Identity(n, n)});
  }

  static QuantumChannel unitary(const Matrix& u) { return QuantumChannel({u}); }

  /// Partial trace over the second tensor factor, realized as the Kraus
  /// family K_k = 1 (x) <k|.
  static QuantumChannel partial_trace_second(Eigen::Index n1, Eigen::Index n2) {
    std::vector<Matrix> ks;
    ks.reserve(n2);
    for (Eigen::Index k = 0; k < n2; ++k) {
      Matrix bra = Matrix::Zero(1, n2);
      bra(0, k) = 1.0;
      ks.push_back(kron(Matrix::Identity(n1, n1), bra));
    }
    return QuantumChannel(std::move(ks));
  }

 private:
  std::vector<Matrix> kraus_;
};

inline Matrix apply_channel(const QuantumChannel& t, const Matrix& m) {
  return t.apply(m);
}

}  // namespace qig
