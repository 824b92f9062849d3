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

#ifndef PPTM_MATRIX_MEANS_HPP
#define PPTM_MATRIX_MEANS_HPP

#include <cmath>
#include <string>

#include "pptm/core_linalg.hpp"

namespace pptm {

/// Weight t of the mean A #_t B, restricted to [0, 1].
class MeanParams {
 public:
  explicit MeanParams(double t) : t_(t) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("mean weight t must lie in [0, 1]");
  }
  double t() const noexcept { return t_; }
  MeanParams complement() const { return MeanParams(1.0 - t_); }

 private:
  double t_;
};

struct MeanOptions {
  /// Replace A, B by A + eps I, B + eps I before taking the mean. Zero keeps
  /// the strict positive-definite contract.
  double regularization = 0.0;
};

/// True when lambda_min(a) > kDefiniteRelative * ||a||.
inline bool is_positive_definite(const HermMatrix& a) {
  RealVector ev = eigenvalues(a);
  double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  return ev(ev.size() - 1) > kDefiniteRelative * norm;
}

inline void require_positive_definite(const HermMatrix& a, const char* what) {
  if (!is_positive_definite(a)) throw SingularMatrix(std::string(what) + " is not positive definite");
}

/// A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}.
inline HermMatrix geometric_mean_t(const HermMatrix& a, const HermMatrix& b, MeanParams t,
                                   const MeanOptions& opts = {}) {
  if (a.size() != b.size()) throw InvalidInput("geometric mean operands differ in dimension");
  if (!(opts.regularization >= 0.0)) throw InvalidInput("regularization must be nonnegative");
  HermMatrix a_reg = a;
  HermMatrix b_reg = b;
  if (opts.regularization > 0.0) {
    HermMatrix shift = opts.regularization * HermMatrix::identity(a.size());
    a_reg = a + shift;
    b_reg = b + shift;
  }
  require_positive_definite(a_reg, "left mean operand");
  require_positive_definite(b_reg, "right mean operand");

  EigenSystem es = herm_eig(a_reg);
  RealVector root = es.values.cwiseSqrt();
  ComplexMatrix a_half = es.vectors * root.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  ComplexMatrix a_inv_half =
      es.vectors * root.cwiseInverse().cast<Complex>().asDiagonal() * es.vectors.adjoint();
  HermMatrix inner(a_inv_half * b_reg.mat() * a_inv_half);
  HermMatrix inner_t = mat_pow(inner, t.t());
  return HermMatrix(a_half * inner_t.mat() * a_half);
}

inline HermMatrix geometric_mean(const HermMatrix& a, const HermMatrix& b) {
  return geometric_mean_t(a, b, MeanParams(0.5));
}

/// Whether [[A, Z], [Z, B]] is PSD. By the maximal characterization of the
/// geometric mean, every such Hermitian Z satisfies Z <= A # B.
inline bool check_max_characterization(const HermMatrix& a, const HermMatrix& b, const ComplexMatrix& z,
                                       const Tolerance& tol = Tolerance{}) {
  const Index n = a.size();
  if (b.size() != n || z.rows() != n || z.cols() != n) {
    throw InvalidInput("max characterization: dimension mismatch");
  }
  double zscale = z.size() ? z.cwiseAbs().maxCoeff() : 0.0;
  HermMatrix zh = HermMatrix::checked(z, 1e-12 * std::max(1.0, zscale), "Z");
  ComplexMatrix m(2 * n, 2 * n);
  m << a.mat(), zh.mat(), zh.mat(), b.mat();
  return is_psd(HermMatrix(m), tol).holds;
}

/// lambda_min((A + B)/2 - A # B); nonnegative up to round-off.
inline double amgm_margin(const HermMatrix& a, const HermMatrix& b) {
  HermMatrix g = geometric_mean(a, b);
  return lambda_min(0.5 * (a + b) - g);
}

}  // namespace pptm

#endif  // PPTM_MATRIX_MEANS_HPP
