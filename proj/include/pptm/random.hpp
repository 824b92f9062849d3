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

#ifndef PPTM_RANDOM_HPP
#define PPTM_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string_view>

#include "pptm/block_ops.hpp"
#include "pptm/core_linalg.hpp"

namespace pptm {

using Rng = std::mt19937_64;

/// Condition-number cap for every generated positive definite operand.
inline constexpr double kConditionCap = 1e6;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// FNV-1a; used to give each named check its own RNG stream.
inline std::uint64_t stream_key(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Independent generator for one trial, a pure function of its key.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::uint64_t s = detail::splitmix64(seed);
  s = detail::splitmix64(s ^ stream);
  s = detail::splitmix64(s ^ trial);
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Entries with independent standard normal real and imaginary parts.
inline ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      double re = normal(rng);
      double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

/// Haar-distributed unitary: QR of a Gaussian matrix with R's diagonal
/// phases moved into Q.
inline ComplexMatrix haar_unitary(Index n, Rng& rng) {
  ComplexMatrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline HermMatrix random_hermitian(Index n, Rng& rng) {
  ComplexMatrix g = gaussian_matrix(n, n, rng);
  return HermMatrix(0.5 * (g + g.adjoint()));
}

/// Positive definite matrix with log-uniform spectrum spanning at most
/// `decades` orders of magnitude, rotated by a Haar unitary.
inline HermMatrix random_pd(Index n, Rng& rng, double decades = 3.0) {
  RealVector spectrum(n);
  for (Index i = 0; i < n; ++i) spectrum(i) = std::pow(10.0, uniform(rng, -0.5 * decades, 0.5 * decades));
  ComplexMatrix u = haar_unitary(n, rng);
  return HermMatrix(u * spectrum.cast<Complex>().asDiagonal() * u.adjoint());
}

inline double condition_number(const HermMatrix& a) {
  RealVector ev = eigenvalues(a);
  double lo = ev(ev.size() - 1);
  return lo > 0.0 ? ev(0) / lo : std::numeric_limits<double>::infinity();
}

/// Normal matrix U diag(z) U^* with |z_i| in [0.5, 2].
inline ComplexMatrix random_normal(Index n, Rng& rng) {
  Eigen::VectorXcd z(n);
  for (Index i = 0; i < n; ++i) z(i) = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, -std::numbers::pi, std::numbers::pi));
  ComplexMatrix u = haar_unitary(n, rng);
  return u * z.asDiagonal() * u.adjoint();
}

/// Gaussian matrix redrawn until its condition number is below `cond_cap`.
inline ComplexMatrix random_invertible(Index n, Rng& rng, double cond_cap = kConditionCap) {
  for (;;) {
    ComplexMatrix t = gaussian_matrix(n, n, rng);
    RealVector sv = Eigen::JacobiSVD<ComplexMatrix>(t).singularValues();
    if (sv(n - 1) > 0.0 && sv(0) / sv(n - 1) < cond_cap) return t;
  }
}

/// PSD block [[A, X^*], [X, B]] = G G^* with G of size 2n x r, r drawn from
/// {n + 1, 2n, 2n + 2}; r = n + 1 gives a rank-deficient M with PD diagonal
/// blocks.
inline Block2x2 random_psd_block(Index n, Rng& rng) {
  const Index choices[] = {n + 1, 2 * n, 2 * n + 2};
  Index r = choices[std::uniform_int_distribution<int>(0, 2)(rng)];
  ComplexMatrix g = gaussian_matrix(2 * n, r, rng);
  return Block2x2::from_assembled(HermMatrix(g * g.adjoint() / static_cast<double>(r)));
}

/// Largest eigenvalue of B^{-1/2} Y A^{-1} Y^* B^{-1/2}; scaling Y by
/// 1/sqrt of it puts [[A, Y^*], [Y, B]] on the PSD boundary.
inline double schur_ratio(const HermMatrix& a, const ComplexMatrix& y, const HermMatrix& b) {
  ComplexMatrix b_inv_half = mat_pow(b, -0.5).mat();
  ComplexMatrix a_inv = mat_pow(a, -1.0).mat();
  return lambda_max(HermMatrix(b_inv_half * y * a_inv * y.adjoint() * b_inv_half));
}

/// PSD block with Hermitian X; such a block is automatically PPT.
inline Block2x2 random_hermitian_x_block(Index n, Rng& rng) {
  double shrink = uniform(rng, 0.2, 1.0);
  HermMatrix a = random_pd(n, rng);
  HermMatrix b = random_pd(n, rng);
  HermMatrix h = random_hermitian(n, rng);
  double c = shrink / std::sqrt(schur_ratio(a, h.mat(), b));
  return Block2x2(a, c * h.mat(), b);
}

enum class PptStrategy { HermitianX, Rejection, ScaledX };

/// PPT block from a seed-deterministic mix of strategies:
///  - HermitianX (half the draws): PSD with Hermitian X, hence PPT;
///  - Rejection: G G^* kept when its partial transpose is PSD (n <= 4,
///    bounded attempts, falling back to ScaledX);
///  - ScaledX: generic X scaled inside both Schur-complement bounds.
inline Block2x2 random_ppt_block(Index n, Rng& rng, PptStrategy* used = nullptr) {
  double u = uniform(rng, 0.0, 1.0);
  if (u < 0.5) {
    if (used) *used = PptStrategy::HermitianX;
    return random_hermitian_x_block(n, rng);
  }
  if (u < 0.75 && n <= 4) {
    for (int attempt = 0; attempt < 4000; ++attempt) {
      ComplexMatrix g = gaussian_matrix(2 * n, 2 * n + 2, rng);
      Block2x2 candidate = Block2x2::from_assembled(HermMatrix(g * g.adjoint() / static_cast<double>(2 * n + 2)));
      if (is_ppt(candidate, Tolerance(0.0, 0.0)).holds && condition_number(candidate.a()) < kConditionCap &&
          condition_number(candidate.b()) < kConditionCap) {
        if (used) *used = PptStrategy::Rejection;
        return candidate;
      }
    }
  }
  if (used) *used = PptStrategy::ScaledX;
  double shrink = uniform(rng, 0.2, 1.0);
  HermMatrix a = random_pd(n, rng);
  HermMatrix b = random_pd(n, rng);
  ComplexMatrix y = gaussian_matrix(n, n, rng);
  double ratio = std::max(schur_ratio(a, y, b), schur_ratio(a, y.adjoint(), b));
  return Block2x2(a, (shrink / std::sqrt(ratio)) * y, b);
}

}  // namespace pptm

#endif  // PPTM_RANDOM_HPP
