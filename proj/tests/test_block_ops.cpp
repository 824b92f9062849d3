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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "pptm/block_ops.hpp"
#include "pptm/random.hpp"
#include "pptm/verify/runner.hpp"

namespace pptm {
namespace {

TEST(Block2x2, AssemblesWithXInTheLowerLeft) {
  ComplexMatrix x(2, 2);
  x << Complex(1, 2), 3.0, 4.0, 5.0;
  Block2x2 b(HermMatrix::identity(2), x, 2.0 * HermMatrix::identity(2));
  HermMatrix m = b.assemble();
  EXPECT_EQ(m(2, 0), Complex(1, 2));
  EXPECT_EQ(m(0, 2), Complex(1, -2));
  EXPECT_EQ(m(3, 0), Complex(4, 0));
  EXPECT_EQ(m(0, 3), Complex(4, 0));
  EXPECT_EQ(m(3, 3), Complex(2, 0));
}

TEST(Block2x2, RejectsInconsistentDimensions) {
  EXPECT_THROW(Block2x2(HermMatrix::identity(2), ComplexMatrix::Zero(2, 2), HermMatrix::identity(3)), InvalidInput);
  EXPECT_THROW(Block2x2(HermMatrix::identity(2), ComplexMatrix::Zero(2, 3), HermMatrix::identity(2)), InvalidInput);
  EXPECT_THROW(Block2x2::from_assembled(HermMatrix::identity(3)), InvalidInput);
}

TEST(Block2x2, PartialTransposeIsInvolutive) {
  Rng rng = trial_rng(20, stream_key("pt"), 0);
  Block2x2 b = random_psd_block(3, rng);
  Block2x2 twice = b.partial_transpose().partial_transpose();
  EXPECT_EQ((twice.x() - b.x()).norm(), 0.0);
  EXPECT_EQ((b.partial_transpose().x() - b.x().adjoint()).norm(), 0.0);
  Block2x2 round = Block2x2::from_assembled(b.assemble());
  EXPECT_EQ((round.x() - b.x()).norm(), 0.0);
}

TEST(Ppt, BellBlockIsPsdButNotPpt) {
  Block2x2 bell = verify::bell_block();
  PptCertificate c = is_ppt(bell);
  EXPECT_FALSE(c.holds);
  EXPECT_NEAR(c.margin, 0.0, 1e-15);
  EXPECT_NEAR(c.transposed_margin, -0.5, 1e-12);
}

TEST(Ppt, HermitianOffDiagonalBlocksArePpt) {
  Rng rng = trial_rng(21, stream_key("hx"), 0);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_ppt(random_hermitian_x_block(3, rng)).holds);
}

TEST(Ppt, GeneratorMixReachesEveryStrategyAndStaysPpt) {
  std::set<PptStrategy> seen;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng = trial_rng(22, stream_key("ppt"), trial);
    PptStrategy used;
    Block2x2 b = random_ppt_block(2, rng, &used);
    seen.insert(used);
    EXPECT_TRUE(is_ppt(b, kPreconditionTolerance).holds);
    EXPECT_TRUE(is_positive_definite(b.a()));
    EXPECT_TRUE(is_positive_definite(b.b()));
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(MeanCompress, PreservesPptAndHandlesEndpoints) {
  Rng rng = trial_rng(23, stream_key("compress"), 0);
  for (int i = 0; i < 30; ++i) {
    Block2x2 b = random_ppt_block(3, rng);
    double t = uniform(rng, 0.0, 1.0);
    Block2x2 c = mean_compress(b, MeanParams(t));
    EXPECT_TRUE(is_ppt(c).holds);
    Block2x2 zero = mean_compress(b, MeanParams(0.0));
    EXPECT_LT((zero.a().mat() - b.a().mat()).norm(), 1e-10 * b.a().mat().norm());
    EXPECT_LT((zero.b().mat() - b.b().mat()).norm(), 1e-10 * b.b().mat().norm());
    EXPECT_EQ((c.x() - b.x()).norm(), 0.0);
  }
}

TEST(MeanCompress, RejectsNonPptInput) {
  ComplexMatrix m = verify::bell_block().assemble().mat() + 0.01 * ComplexMatrix::Identity(4, 4);
  EXPECT_THROW(mean_compress(Block2x2::from_assembled(HermMatrix(m)), MeanParams(0.5)), PreconditionViolated);
}

TEST(TwoTerm, ReconstructsWithUnitaries) {
  Rng rng = trial_rng(24, stream_key("twoterm"), 0);
  for (int i = 0; i < 50; ++i) {
    Index n = 1 + i % 5;
    HermMatrix m = random_psd_block(n, rng).assemble();
    TwoTermDecomposition d = two_term_decompose(m);
    EXPECT_LE((two_term_reconstruct(m, d) - m.mat()).norm(), 1e-9 * m.mat().norm());
    EXPECT_LE(isometry_defect(d.u), 1e-10 * static_cast<double>(n));
    EXPECT_LE(isometry_defect(d.v), 1e-10 * static_cast<double>(n));
  }
}

TEST(TwoTerm, RejectsOddAndIndefiniteInput) {
  EXPECT_THROW(two_term_decompose(HermMatrix::identity(3)), InvalidInput);
  HermMatrix indefinite = HermMatrix::diagonal((RealVector(2) << 1.0, -1.0).finished());
  EXPECT_THROW(two_term_decompose(indefinite), PreconditionViolated);
}

TEST(IsometryDecompose, ReconstructsMeanCompressedBlock) {
  Rng rng = trial_rng(25, stream_key("iso"), 0);
  for (int i = 0; i < 50; ++i) {
    Index n = 1 + i % 5;
    Block2x2 b = random_ppt_block(n, rng);
    double t = uniform(rng, 0.0, 1.0);
    IsometryDecomposition d = isometry_decompose(b, MeanParams(t));
    ComplexMatrix target = d.compressed.assemble().mat();
    EXPECT_LE((isometry_reconstruct(d.compressed, d.isometries) - target).norm(), 1e-9 * target.norm());
    EXPECT_EQ(d.isometries.u_tilde.rows(), 2 * n);
    EXPECT_EQ(d.isometries.u_tilde.cols(), n);
    EXPECT_LE(isometry_defect(d.isometries.u_tilde), 1e-10 * static_cast<double>(n));
    EXPECT_LE(isometry_defect(d.isometries.v_tilde), 1e-10 * static_cast<double>(n));
  }
}

TEST(AndoContraction, FactorsOffDiagonalBlock) {
  Rng rng = trial_rng(26, stream_key("ando"), 0);
  for (int i = 0; i < 30; ++i) {
    Block2x2 b = random_psd_block(3, rng);
    ComplexMatrix k = ando_contraction(b);
    EXPECT_LE(op_norm(k), 1.0 + 1e-8);
    ComplexMatrix rebuilt = mat_pow(b.a(), 0.5).mat() * k * mat_pow(b.b(), 0.5).mat();
    EXPECT_LT((rebuilt - b.x().adjoint()).norm(), 1e-8 * std::max(1.0, b.x().norm()));
  }
}

TEST(AndoContraction, RejectsNonPsdAndSupportsPseudoInverse) {
  Block2x2 big(HermMatrix::identity(2), 2.0 * ComplexMatrix::Identity(2, 2), HermMatrix::identity(2));
  EXPECT_THROW(ando_contraction(big), PreconditionViolated);
  HermMatrix singular = HermMatrix::diagonal((RealVector(2) << 1.0, 0.0).finished());
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 0) = 0.5;
  Block2x2 b(singular, x, singular);
  EXPECT_THROW(ando_contraction(b), SingularMatrix);
  ContractionOptions opts;
  opts.pseudo_inverse = true;
  ComplexMatrix k = ando_contraction(b, opts);
  EXPECT_NEAR(k(0, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(k(1, 1)), 0.0, 1e-12);
}

}  // namespace
}  // namespace pptm
