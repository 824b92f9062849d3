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
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pptm/core_linalg.hpp"
#include "pptm/random.hpp"

namespace pptm {
namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(Tolerance, RejectsNegativeAndNonFinite) {
  EXPECT_THROW(Tolerance(-1.0, 0.0), InvalidInput);
  EXPECT_THROW(Tolerance(0.0, -1e-9), InvalidInput);
  EXPECT_THROW(Tolerance(std::numeric_limits<double>::quiet_NaN(), 0.0), InvalidInput);
  EXPECT_THROW(Tolerance(0.0, std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST(Tolerance, ThresholdMixesAbsoluteAndRelative) {
  Tolerance tol(1e-9, 1e-6);
  EXPECT_DOUBLE_EQ(tol.threshold(10.0), 1e-9 + 1e-5);
  EXPECT_TRUE(tol.accepts(-1e-5, 10.0));
  EXPECT_FALSE(tol.accepts(-2e-5, 10.0));
}

TEST(HermMatrix, ConstructorSymmetrizes) {
  HermMatrix h(mat2(1.0, Complex(2.0, 1.0), Complex(2.0, -3.0), Complex(4.0, 0.5)));
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
  EXPECT_EQ(h(1, 1).imag(), 0.0);
  EXPECT_EQ(h(0, 1), Complex(2.0, 2.0));
}

TEST(HermMatrix, CheckedRejectsNonHermitianAndBadShapes) {
  EXPECT_THROW(HermMatrix::checked(mat2(1.0, 2.0, 3.0, 4.0), 1e-12, "M"), InvalidInput);
  EXPECT_THROW(HermMatrix::checked(ComplexMatrix(2, 3), 1e-12, "M"), InvalidInput);
  EXPECT_THROW(HermMatrix::checked(ComplexMatrix(0, 0), 1e-12, "M"), InvalidInput);
  ComplexMatrix nan = mat2(1.0, 0.0, 0.0, std::numeric_limits<double>::quiet_NaN());
  EXPECT_THROW(HermMatrix::checked(nan, 1e-12, "M"), InvalidInput);
  EXPECT_NO_THROW(HermMatrix::checked(mat2(1.0, Complex(0, 1), Complex(0, -1), 2.0), 1e-12, "M"));
}

TEST(HermEig, MatchesClosedForm2x2) {
  Rng rng = trial_rng(1, stream_key("herm2"), 0);
  for (int trial = 0; trial < 100; ++trial) {
    HermMatrix h = random_hermitian(2, rng);
    auto [hi, lo] = oracle::eigenvalues_2x2(h.mat());
    RealVector ev = eigenvalues(h);
    EXPECT_NEAR(ev(0), hi, 1e-12 * std::max(1.0, std::abs(hi)));
    EXPECT_NEAR(ev(1), lo, 1e-12 * std::max(1.0, std::abs(hi)));
  }
}

TEST(HermEig, DescendingReconstructsAndNormalizesPhases) {
  Rng rng = trial_rng(2, stream_key("herm"), 0);
  for (Index n = 1; n <= 6; ++n) {
    HermMatrix h = random_hermitian(n, rng);
    EigenSystem es = herm_eig(h);
    for (Index i = 1; i < n; ++i) EXPECT_GE(es.values(i - 1), es.values(i));
    ComplexMatrix rebuilt = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
    EXPECT_LT((rebuilt - h.mat()).norm(), 1e-12 * std::max(1.0, h.mat().norm()));
    EXPECT_LT(isometry_defect(es.vectors), 1e-13);
    for (Index j = 0; j < n; ++j) {
      Index k = 0;
      es.vectors.col(j).cwiseAbs().maxCoeff(&k);
      EXPECT_GT(es.vectors(k, j).real(), 0.0);
      EXPECT_EQ(es.vectors(k, j).imag(), 0.0);
    }
  }
}

TEST(IsPsd, AgreesWithPivotedLdlOutsideDeadBand) {
  Rng rng = trial_rng(3, stream_key("psd"), 0);
  int decided = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Index n = 1 + trial % 6;
    HermMatrix h = random_hermitian(n, rng);
    // Shift so lambda_min is spread around zero.
    double shift = -lambda_min(h) + uniform(rng, -0.5, 0.5);
    HermMatrix m = h + shift * HermMatrix::identity(n);
    double lmin = lambda_min(m);
    if (std::abs(lmin) <= 1e-9) continue;
    ++decided;
    bool ldl = oracle::ldl_is_psd(m.mat(), 1e-12 * std::max(1.0, m.mat().cwiseAbs().maxCoeff()));
    EXPECT_EQ(is_psd(m).holds, ldl) << "lambda_min = " << lmin;
  }
  EXPECT_GT(decided, 250);
}

TEST(IsPsd, ToleranceAcceptsRoundOffOnly) {
  HermMatrix rank_one(mat2(1.0, 1.0, 1.0, 1.0));
  EXPECT_TRUE(is_psd(rank_one).holds);
  HermMatrix slightly_negative = rank_one - 1e-6 * HermMatrix::identity(2);
  EXPECT_FALSE(is_psd(slightly_negative).holds);
  EXPECT_NEAR(is_psd(slightly_negative).margin, -1e-6, 1e-15);
}

TEST(LoewnerLeq, OrdersAndRejectsMismatch) {
  HermMatrix a = HermMatrix::diagonal((RealVector(2) << 1.0, 2.0).finished());
  HermMatrix b = HermMatrix::diagonal((RealVector(2) << 2.0, 2.5).finished());
  EXPECT_TRUE(loewner_leq(a, b).holds);
  EXPECT_NEAR(loewner_leq(a, b).margin, 0.5, 1e-15);
  EXPECT_FALSE(loewner_leq(b, a).holds);
  EXPECT_THROW(loewner_leq(a, HermMatrix::identity(3)), InvalidInput);
}

TEST(MatPow, SquareRootSquaresBack) {
  Rng rng = trial_rng(4, stream_key("pow"), 0);
  for (Index n = 1; n <= 5; ++n) {
    HermMatrix a = random_pd(n, rng);
    HermMatrix r = mat_pow(a, 0.5);
    EXPECT_LT((r.mat() * r.mat() - a.mat()).norm(), 1e-10 * a.mat().norm());
    HermMatrix inv = mat_pow(a, -1.0);
    EXPECT_LT((inv.mat() * a.mat() - ComplexMatrix::Identity(n, n)).norm(), 1e-8);
    EXPECT_LT((mat_pow(a, 0.0).mat() - ComplexMatrix::Identity(n, n)).norm(), 1e-15);
  }
}

TEST(MatPow, RejectsIndefiniteAndSingularNegativePowers) {
  HermMatrix indefinite = HermMatrix::diagonal((RealVector(2) << 1.0, -1.0).finished());
  EXPECT_THROW(mat_pow(indefinite, 0.5), InvalidInput);
  HermMatrix singular = HermMatrix::diagonal((RealVector(2) << 1.0, 0.0).finished());
  EXPECT_THROW(mat_pow(singular, -0.5), SingularMatrix);
  HermMatrix root = mat_pow(singular, 0.5);
  EXPECT_NEAR(root(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(root(1, 1)), 0.0, 1e-15);
}

TEST(AbsMatrix, SquaresToGramAndKeepsSmallSingularValues) {
  Rng rng = trial_rng(5, stream_key("abs"), 0);
  for (Index n = 1; n <= 5; ++n) {
    ComplexMatrix x = gaussian_matrix(n, n, rng);
    HermMatrix p = abs_matrix(x);
    EXPECT_LT((p.mat() * p.mat() - x.adjoint() * x).norm(), 1e-12 * std::max(1.0, (x.adjoint() * x).norm()));
    EXPECT_TRUE(is_psd(p).holds);
  }
  // diag(1, 1e-10): squaring first would lose the small entry entirely.
  ComplexMatrix tiny = mat2(1.0, 0.0, 0.0, 1e-10);
  EXPECT_NEAR(abs_matrix(tiny)(1, 1).real(), 1e-10, 1e-22);
}

TEST(Svd, ReconstructsWithUnitaryFactors) {
  Rng rng = trial_rng(6, stream_key("svd"), 0);
  ComplexMatrix x = gaussian_matrix(4, 2, rng);
  SvdResult s = svd(x);
  ComplexMatrix sigma = ComplexMatrix::Zero(4, 2);
  for (Index i = 0; i < 2; ++i) sigma(i, i) = s.singular(i);
  EXPECT_LT((s.left * sigma * s.right.adjoint() - x).norm(), 1e-12 * x.norm());
  EXPECT_LT(isometry_defect(s.left), 1e-13);
  EXPECT_LT(isometry_defect(s.right), 1e-13);
  EXPECT_GE(s.singular(0), s.singular(1));
}

TEST(Polar, FactorsAreUnitaryAndPositive) {
  Rng rng = trial_rng(7, stream_key("polar"), 0);
  for (Index n = 1; n <= 5; ++n) {
    ComplexMatrix x = gaussian_matrix(n, n, rng);
    PolarParts p = polar(x);
    EXPECT_LT((p.unitary * p.positive.mat() - x).norm(), 1e-12 * x.norm());
    EXPECT_LT(isometry_defect(p.unitary), 1e-13);
    EXPECT_TRUE(is_psd(p.positive).holds);
  }
}

TEST(Polar, SingularAndZeroInputsStillGiveUnitaries) {
  ComplexMatrix shift = mat2(0.0, 1.0, 0.0, 0.0);
  PolarParts p = polar(shift);
  EXPECT_LT((p.unitary * p.positive.mat() - shift).norm(), 1e-15);
  EXPECT_LT(isometry_defect(p.unitary), 1e-15);
  PolarParts z = polar(ComplexMatrix(ComplexMatrix::Zero(3, 3)));
  EXPECT_LT((z.unitary - ComplexMatrix::Identity(3, 3)).norm(), 1e-15);
}

TEST(Norms, OperatorNormAndSpectralRadius) {
  Rng rng = trial_rng(8, stream_key("norm"), 0);
  ComplexMatrix x = gaussian_matrix(4, 4, rng);
  EXPECT_NEAR(op_norm(x), oracle::power_norm(x), 1e-8 * op_norm(x));
  ComplexMatrix nilpotent = mat2(0.0, 5.0, 0.0, 0.0);
  EXPECT_NEAR(spectral_radius(nilpotent), 0.0, 1e-12);
  EXPECT_NEAR(op_norm(nilpotent), 5.0, 1e-12);
  EXPECT_NEAR(op_norm(HermMatrix::diagonal((RealVector(2) << -3.0, 2.0).finished())), 3.0, 1e-15);
}

TEST(Random, TrialStreamsAreDeterministicAndDistinct) {
  Rng a = trial_rng(42, stream_key("C1"), 5);
  Rng b = trial_rng(42, stream_key("C1"), 5);
  Rng c = trial_rng(42, stream_key("C1"), 6);
  Rng d = trial_rng(42, stream_key("C2"), 5);
  std::uint64_t va = a();
  EXPECT_EQ(va, b());
  EXPECT_NE(va, c());
  EXPECT_NE(va, d());
}

TEST(Random, PdGeneratorRespectsConditionCap) {
  Rng rng = trial_rng(9, stream_key("pd"), 0);
  for (int i = 0; i < 50; ++i) {
    HermMatrix a = random_pd(4, rng);
    EXPECT_LT(condition_number(a), kConditionCap);
    EXPECT_GT(lambda_min(a), 0.0);
  }
}

TEST(Random, HaarUnitaryIsUnitary) {
  Rng rng = trial_rng(10, stream_key("haar"), 0);
  EXPECT_LT(isometry_defect(haar_unitary(6, rng)), 1e-13);
}

}  // namespace
}  // namespace pptm
