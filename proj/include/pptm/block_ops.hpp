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

#ifndef PPTM_BLOCK_OPS_HPP
#define PPTM_BLOCK_OPS_HPP

#include <string>

#include "pptm/core_linalg.hpp"
#include "pptm/matrix_means.hpp"

namespace pptm {

/// Looser tolerance used when a PSD/PPT block is a precondition rather than
/// the quantity being certified.
inline const Tolerance kPreconditionTolerance{1e-8, 1e-8};

/// The 2n x 2n Hermitian matrix M = [[A, X^*], [X, B]], stored as (A, X, B).
/// The lower-left block is X; the upper-right is its adjoint.
class Block2x2 {
 public:
  Block2x2(HermMatrix a, ComplexMatrix x, HermMatrix b)
      : a_(std::move(a)), x_(std::move(x)), b_(std::move(b)) {
    const Index n = a_.size();
    if (b_.size() != n || x_.rows() != n || x_.cols() != n) {
      throw InvalidInput("block dimensions are inconsistent: A is " + std::to_string(n) + "x" +
                         std::to_string(n) + ", B is " + std::to_string(b_.size()) + "x" +
                         std::to_string(b_.size()) + ", X is " + std::to_string(x_.rows()) + "x" +
                         std::to_string(x_.cols()));
    }
    require_finite(x_, "off-diagonal block X");
  }

  /// Splits a 2n x 2n Hermitian matrix into its blocks.
  static Block2x2 from_assembled(const HermMatrix& m) {
    if (m.size() % 2 != 0) throw InvalidInput("assembled block matrix must have even dimension");
    const Index n = m.size() / 2;
    return Block2x2(HermMatrix(m.mat().topLeftCorner(n, n)), m.mat().bottomLeftCorner(n, n),
                    HermMatrix(m.mat().bottomRightCorner(n, n)));
  }

  Index n() const noexcept { return a_.size(); }
  const HermMatrix& a() const noexcept { return a_; }
  const HermMatrix& b() const noexcept { return b_; }
  const ComplexMatrix& x() const noexcept { return x_; }

  HermMatrix assemble() const {
    const Index n = this->n();
    ComplexMatrix m(2 * n, 2 * n);
    m << a_.mat(), x_.adjoint(), x_, b_.mat();
    return HermMatrix(m);
  }

  /// Swaps X and X^*; assembles to [[A, X], [X^*, B]]. Involutive.
  Block2x2 partial_transpose() const { return Block2x2(a_, x_.adjoint(), b_); }

 private:
  HermMatrix a_;
  ComplexMatrix x_;
  HermMatrix b_;
};

struct PptCertificate {
  bool holds;
  double margin;             // lambda_min of [[A, X^*], [X, B]]
  double transposed_margin;  // lambda_min of [[A, X], [X^*, B]]
};

inline PptCertificate is_ppt(const Block2x2& block, const Tolerance& tol = Tolerance{}) {
  OrderCertificate direct = is_psd(block.assemble(), tol);
  OrderCertificate transposed = is_psd(block.partial_transpose().assemble(), tol);
  return {direct.holds && transposed.holds, direct.margin, transposed.margin};
}

/// (A, X, B) -> (A #_t B, X, A #_{1-t} B). PPT is preserved; the caller may
/// certify that on the result.
inline Block2x2 mean_compress(const Block2x2& block, MeanParams t,
                              const Tolerance& precondition = kPreconditionTolerance) {
  PptCertificate cert = is_ppt(block, precondition);
  if (!cert.holds) {
    throw PreconditionViolated("mean_compress needs a PPT block (margins " +
                               std::to_string(cert.margin) + ", " +
                               std::to_string(cert.transposed_margin) + ")");
  }
  return Block2x2(geometric_mean_t(block.a(), block.b(), t), block.x(),
                  geometric_mean_t(block.a(), block.b(), t.complement()));
}

/// Unitaries with M = U diag(A, O) U^* + V diag(O, B) V^*.
struct TwoTermDecomposition {
  ComplexMatrix u;
  ComplexMatrix v;
};

namespace detail {

// For a tall L (2n x n) returns a 2n x 2n unitary whose first n columns W Z^*
// satisfy (W Z^*) (L^* L) (W Z^*)^* = L L^*, with the remaining columns an
// orthonormal complement.
inline ComplexMatrix aligned_unitary(const ComplexMatrix& l, bool isometry_first) {
  const Index n = l.cols();
  SvdResult s = svd(l);
  ComplexMatrix iso = s.left.leftCols(n) * s.right.adjoint();
  ComplexMatrix out(l.rows(), l.rows());
  if (isometry_first) {
    out << iso, s.left.rightCols(l.rows() - n);
  } else {
    out << s.left.rightCols(l.rows() - n), iso;
  }
  return out;
}

}  // namespace detail

/// Factor a PSD block matrix as a sum of two unitary congruences. Split the
/// square root M^{1/2} = [L | R] by columns: L^* L = A and R^* R = B, and the
/// polar factors of L and R carry A and B onto L L^* and R R^*.
inline TwoTermDecomposition two_term_decompose(const HermMatrix& m) {
  if (m.size() % 2 != 0) throw InvalidInput("two_term_decompose needs an even dimension");
  OrderCertificate cert = is_psd(m, kPreconditionTolerance);
  if (!cert.holds) {
    throw PreconditionViolated("two_term_decompose needs a PSD matrix (lambda_min " +
                               std::to_string(cert.margin) + ")");
  }
  const Index n = m.size() / 2;
  // M passed the (looser) precondition, so any negative eigenvalue is noise.
  EigenSystem es = herm_eig(m);
  RealVector root_values = es.values.cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix root = es.vectors * root_values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  return {detail::aligned_unitary(root.leftCols(n), true),
          detail::aligned_unitary(root.rightCols(n), false)};
}

/// U diag(A, O) U^* + V diag(O, B) V^* with A, B the diagonal blocks of `m`.
inline ComplexMatrix two_term_reconstruct(const HermMatrix& m, const TwoTermDecomposition& d) {
  const Index n = m.size() / 2;
  return d.u.leftCols(n) * m.mat().topLeftCorner(n, n) * d.u.leftCols(n).adjoint() +
         d.v.rightCols(n) * m.mat().bottomRightCorner(n, n) * d.v.rightCols(n).adjoint();
}

/// 2n x n isometries with compressed = U~ (A #_t B) U~^* + V~ (A #_{1-t} B) V~^*.
struct IsometryPair {
  ComplexMatrix u_tilde;
  ComplexMatrix v_tilde;
};

struct IsometryDecomposition {
  Block2x2 compressed;
  IsometryPair isometries;
};

inline IsometryDecomposition isometry_decompose(const Block2x2& block, MeanParams t) {
  Block2x2 compressed = mean_compress(block, t);
  TwoTermDecomposition d = two_term_decompose(compressed.assemble());
  const Index n = block.n();
  return {compressed, {d.u.leftCols(n), d.v.rightCols(n)}};
}

inline ComplexMatrix isometry_reconstruct(const Block2x2& compressed, const IsometryPair& p) {
  return p.u_tilde * compressed.a().mat() * p.u_tilde.adjoint() +
         p.v_tilde * compressed.b().mat() * p.v_tilde.adjoint();
}

struct ContractionOptions {
  Tolerance tol{1e-8, 1e-8};
  /// Use Moore-Penrose inverse square roots for singular A or B.
  bool pseudo_inverse = false;
};

namespace detail {

inline ComplexMatrix inverse_sqrt(const HermMatrix& a, bool pseudo) {
  if (!pseudo) return mat_pow(a, -0.5).mat();
  EigenSystem es = herm_eig(a);
  const double cutoff = kDefiniteRelative * std::abs(es.values(0));
  RealVector d(a.size());
  for (Index i = 0; i < a.size(); ++i) d(i) = es.values(i) > cutoff ? 1.0 / std::sqrt(es.values(i)) : 0.0;
  return es.vectors * d.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

}  // namespace detail

/// Contraction K with upper-right block X^* = A^{1/2} K B^{1/2}, i.e.
/// K = A^{-1/2} X^* B^{-1/2}. Throws if ||K|| > 1 + tol, which means the
/// block was not PSD.
inline ComplexMatrix ando_contraction(const Block2x2& block, const ContractionOptions& opts = {}) {
  if (!opts.pseudo_inverse) {
    require_positive_definite(block.a(), "A");
    require_positive_definite(block.b(), "B");
  }
  ComplexMatrix k = detail::inverse_sqrt(block.a(), opts.pseudo_inverse) * block.x().adjoint() *
                    detail::inverse_sqrt(block.b(), opts.pseudo_inverse);
  double norm = op_norm(k);
  if (!opts.tol.accepts(1.0 - norm, 1.0)) {
    throw PreconditionViolated("block is not PSD: contraction norm " + std::to_string(norm) + " > 1");
  }
  return k;
}

}  // namespace pptm

#endif  // PPTM_BLOCK_OPS_HPP
