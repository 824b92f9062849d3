// Copyright 2026 The pptm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPTM_CORE_LINALG_HPP
#define PPTM_CORE_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "pptm/errors.hpp"

namespace pptm {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Mixed absolute/relative tolerance. A quantity that should be
/// nonnegative is accepted when it is >= -(atol + rtol * scale).
class Tolerance {
 public:
  explicit Tolerance(double atol = 1e-9, double rtol = 1e-9) : atol_(atol), rtol_(rtol) {
    if (!(atol >= 0.0) || !(rtol >= 0.0) || !std::isfinite(atol) || !std::isfinite(rtol)) {
      throw InvalidInput("tolerance atol/rtol must be finite and nonnegative");
    }
  }

  double atol() const noexcept { return atol_; }
  double rtol() const noexcept { return rtol_; }
  double threshold(double scale) const noexcept { return atol_ + rtol_ * scale; }
  bool accepts(double margin, double scale) const noexcept { return margin >= -threshold(scale); }

  friend bool operator==(const Tolerance&, const Tolerance&) = default;

 private:
  double atol_;
  double rtol_;
};

inline bool all_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

inline void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) throw InvalidInput(std::string(what) + " has non-finite entries");
}

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInput(std::string(what) + " must be square and nonempty, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

/// max |m(i,j) - conj(m(j,i))|.
inline double hermitian_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Square complex matrix that is exactly Hermitian. Construction
/// symmetrizes, so (i,j) and (j,i) are bitwise conjugates afterwards.
class HermMatrix {
 public:
  explicit HermMatrix(const ComplexMatrix& m) {
    require_square(m, "Hermitian matrix");
    require_finite(m, "Hermitian matrix");
    m_ = 0.5 * (m + m.adjoint());
    for (Index i = 0; i < m_.rows(); ++i) m_(i, i) = Complex(m_(i, i).real(), 0.0);
    for (Index j = 0; j < m_.cols(); ++j) {
      for (Index i = j + 1; i < m_.rows(); ++i) m_(j, i) = std::conj(m_(i, j));
    }
  }

  /// Rejects input whose Hermitian deviation exceeds `max_deviation`
  /// instead of silently symmetrizing it.
  static HermMatrix checked(const ComplexMatrix& m, double max_deviation, const char* what) {
    require_square(m, what);
    require_finite(m, what);
    double dev = hermitian_deviation(m);
    if (dev > max_deviation) {
      throw InvalidInput(std::string(what) + " is not Hermitian (deviation " + std::to_string(dev) +
                         ")");
    }
    return HermMatrix(m);
  }

  static HermMatrix identity(Index n) { return HermMatrix(ComplexMatrix::Identity(n, n)); }
  static HermMatrix zero(Index n) { return HermMatrix(ComplexMatrix::Zero(n, n)); }
  static HermMatrix diagonal(const RealVector& d) {
    return HermMatrix(ComplexMatrix(d.cast<Complex>().asDiagonal()));
  }

  Index size() const noexcept { return m_.rows(); }
  const ComplexMatrix& mat() const noexcept { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

inline HermMatrix operator+(const HermMatrix& a, const HermMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in Hermitian sum");
  return HermMatrix(a.mat() + b.mat());
}

inline HermMatrix operator-(const HermMatrix& a, const HermMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in Hermitian difference");
  return HermMatrix(a.mat() - b.mat());
}

inline HermMatrix operator*(double s, const HermMatrix& a) { return HermMatrix(s * a.mat()); }

/// S H S*.
inline HermMatrix congruence(const HermMatrix& h, const ComplexMatrix& s) {
  if (s.cols() != h.size()) throw InvalidInput("dimension mismatch in congruence");
  return HermMatrix(s * h.mat() * s.adjoint());
}

/// Eigenvalues sorted descending, eigenvectors as unitary columns.
struct EigenSystem {
  RealVector values;
  ComplexMatrix vectors;
};

namespace detail {

// Index of the largest-magnitude component; ties go to the lowest index.
inline Index phase_pivot(const Eigen::Ref<const Eigen::VectorXcd>& v) {
  Index k = 0;
  double best = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v(i));
    if (a > best * (1.0 + 1e-12)) {
      best = a;
      k = i;
    }
  }
  return k;
}

// Unit factor that rotates a column so its pivot component is real and positive.
inline Complex phase_normalizer(const Eigen::Ref<const Eigen::VectorXcd>& v) {
  if (v.size() == 0) return Complex(1.0, 0.0);
  Complex p = v(phase_pivot(v));
  if (std::abs(p) <= 0.0) return Complex(1.0, 0.0);
  return std::conj(p) / std::abs(p);
}

inline void normalize_column_phases(ComplexMatrix& q) {
  for (Index j = 0; j < q.cols(); ++j) {
    Index k = phase_pivot(q.col(j));
    q.col(j) *= phase_normalizer(q.col(j));
    // Rounding in the rotation can leave a residual imaginary part on the pivot.
    q(k, j) = Complex(std::abs(q(k, j)), 0.0);
  }
}

}  // namespace detail

inline EigenSystem herm_eig(const HermMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.mat());
  if (solver.info() != Eigen::Success) throw InvalidInput("Hermitian eigensolver did not converge");
  const Index n = a.size();
  EigenSystem out{RealVector(n), ComplexMatrix(n, n)};
  for (Index j = 0; j < n; ++j) {
    out.values(j) = solver.eigenvalues()(n - 1 - j);
    out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  detail::normalize_column_phases(out.vectors);
  return out;
}

/// Descending eigenvalues only.
inline RealVector eigenvalues(const HermMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.mat(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvalidInput("Hermitian eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

inline double lambda_min(const HermMatrix& a) { return eigenvalues(a)(a.size() - 1); }
inline double lambda_max(const HermMatrix& a) { return eigenvalues(a)(0); }

/// Operator norm of a Hermitian matrix, max |lambda|.
inline double op_norm(const HermMatrix& a) {
  RealVector ev = eigenvalues(a);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

inline double op_norm(const ComplexMatrix& x) {
  require_finite(x, "matrix");
  if (x.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  return svd.singularValues()(0);
}

inline double spectral_radius(const ComplexMatrix& x) {
  require_square(x, "spectral_radius input");
  require_finite(x, "spectral_radius input");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(x, false);
  if (solver.info() != Eigen::Success) throw InvalidInput("eigensolver did not converge");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

/// X = left * diag(singular) * right^*, with full unitary factors and
/// singular values descending. Each left singular vector has its
/// largest-magnitude entry real-positive; the paired right vector is
/// rotated by the same phase.
struct SvdResult {
  ComplexMatrix left;
  RealVector singular;
  ComplexMatrix right;
};

inline SvdResult svd(const ComplexMatrix& x) {
  require_finite(x, "svd input");
  if (x.size() == 0) throw InvalidInput("svd input is empty");
  Eigen::JacobiSVD<ComplexMatrix> solver(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  const Index k = out.singular.size();
  for (Index j = 0; j < k; ++j) {
    Complex ph = detail::phase_normalizer(out.left.col(j));
    out.left.col(j) *= ph;
    out.right.col(j) *= ph;
  }
  for (Index j = k; j < out.left.cols(); ++j) out.left.col(j) *= detail::phase_normalizer(out.left.col(j));
  for (Index j = k; j < out.right.cols(); ++j) out.right.col(j) *= detail::phase_normalizer(out.right.col(j));
  return out;
}

/// Negative eigenvalues above -kClampRelative * ||A|| are treated as
/// round-off and clamped to zero before fractional powers.
inline constexpr double kClampRelative = 1e-10;
/// A PSD matrix counts as definite when lambda_min > kDefiniteRelative * ||A||.
inline constexpr double kDefiniteRelative = 1e-9;

/// A^t for PSD A via its eigendecomposition. t = 0 gives the identity
/// (0^0 = 1). Negative t requires A positive definite.
inline HermMatrix mat_pow(const HermMatrix& a, double t) {
  if (!std::isfinite(t)) throw InvalidInput("mat_pow exponent must be finite");
  EigenSystem es = herm_eig(a);
  const Index n = a.size();
  const double norm = std::max(std::abs(es.values(0)), std::abs(es.values(n - 1)));
  const double clamp = kClampRelative * norm;
  RealVector powered(n);
  for (Index i = 0; i < n; ++i) {
    double lam = es.values(i);
    if (lam < 0.0) {
      if (lam <= -clamp) {
        throw InvalidInput("mat_pow requires a positive semidefinite matrix (eigenvalue " +
                           std::to_string(lam) + ")");
      }
      lam = 0.0;
    }
    if (t < 0.0 && !(lam > kDefiniteRelative * norm)) {
      throw SingularMatrix("negative power of a singular matrix");
    }
    powered(i) = (t == 0.0) ? 1.0 : std::pow(lam, t);
  }
  if (t == 0.0) return HermMatrix::identity(n);
  return HermMatrix(es.vectors * powered.cast<Complex>().asDiagonal() * es.vectors.adjoint());
}

/// |X| = (X^* X)^{1/2}.
inline HermMatrix abs_matrix(const ComplexMatrix& x) {
  require_square(x, "abs input");
  // V diag(sigma) V^* from the SVD; squaring first would halve the accuracy
  // of small singular values.
  Eigen::JacobiSVD<ComplexMatrix> s(x, Eigen::ComputeFullV);
  const ComplexMatrix& v = s.matrixV();
  return HermMatrix(v * s.singularValues().cast<Complex>().asDiagonal() * v.adjoint());
}

struct OrderCertificate {
  bool holds;
  double margin;  // lambda_min of the difference, always reported
};

/// Loewner order a <= b: lambda_min(b - a) >= -(atol + rtol * ||b - a||).
inline OrderCertificate loewner_leq(const HermMatrix& a, const HermMatrix& b, const Tolerance& tol = Tolerance{}) {
  if (a.size() != b.size()) {
    throw InvalidInput("loewner_leq dimension mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
  RealVector ev = eigenvalues(b - a);
  double margin = ev(ev.size() - 1);
  double scale = std::max(std::abs(ev(0)), std::abs(margin));
  return {tol.accepts(margin, scale), margin};
}

inline OrderCertificate is_psd(const HermMatrix& a, const Tolerance& tol = Tolerance{}) {
  RealVector ev = eigenvalues(a);
  double margin = ev(ev.size() - 1);
  double scale = std::max(std::abs(ev(0)), std::abs(margin));
  return {tol.accepts(margin, scale), margin};
}

/// X = unitary * positive with positive = (X^* X)^{1/2}.
struct PolarParts {
  ComplexMatrix unitary;
  HermMatrix positive;
};

/// Polar decomposition through the SVD X = W S Z^*: U = W Z^*, P = Z S Z^*.
/// For singular X the kernel part of U comes from the phase-normalized
/// singular vectors, so the result is deterministic; X = O gives U = I.
inline PolarParts polar(const ComplexMatrix& x) {
  require_square(x, "polar input");
  SvdResult s = svd(x);
  ComplexMatrix u = s.left * s.right.adjoint();
  HermMatrix p(s.right * s.singular.cast<Complex>().asDiagonal() * s.right.adjoint());
  return {std::move(u), std::move(p)};
}

/// max |(Q^* Q - I)_{ij}| for a matrix with orthonormal columns.
inline double isometry_defect(const ComplexMatrix& q) {
  return (q.adjoint() * q - ComplexMatrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

}  // namespace pptm

#endif  // PPTM_CORE_LINALG_HPP
