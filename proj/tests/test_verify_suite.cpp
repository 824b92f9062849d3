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
#include <string>

#include <gtest/gtest.h>

#include "pptm/json_io.hpp"
#include "pptm/verify/runner.hpp"

namespace pptm::verify {
namespace {

double find_margin(const std::vector<Assertion>& as, const std::string& name) {
  for (const Assertion& a : as) {
    if (a.name == name) return a.margin;
  }
  ADD_FAILURE() << "no assertion named " << name;
  return std::nan("");
}

TEST(Registry, HasTwentyFourUniqueIds) {
  std::set<std::string> ids;
  for (const CheckSpec& s : registry()) {
    ids.insert(s.id);
    EXPECT_TRUE(s.generate);
    EXPECT_TRUE(s.evaluate);
    EXPECT_FALSE(s.statement.empty());
  }
  EXPECT_EQ(registry().size(), 24u);
  EXPECT_EQ(ids.size(), 24u);
  for (int i = 1; i <= 24; ++i) EXPECT_TRUE(ids.count("C" + std::to_string(i)));
}

TEST(RunCheck, RejectsUnknownIdsAndBadDimensions) {
  EXPECT_THROW(run_check("NOPE", 3, 1, 0), UnknownCheck);
  EXPECT_THROW(run_check("C1", 0, 1, 0), InvalidInput);
  EXPECT_THROW(run_check("C1", 9, 1, 0), InvalidInput);
  RunOptions bad_t;
  bad_t.fixed_t = 1.5;
  EXPECT_THROW(run_check("C7", 3, 1, 0, Tolerance{}, bad_t), InvalidInput);
}

TEST(RunCheck, ArithmeticGeometricMeanHasNoViolations) {
  CheckReport r = run_check("C5", 3, 500, 42);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.trials, 500u);
  EXPECT_EQ(r.skipped, 0u);
  ASSERT_TRUE(r.worst_margin.has_value());
  EXPECT_GE(*r.worst_margin, -pass_threshold(r.tol));
}

// Every statement except the reverse AM-GM check is a theorem; C21 is covered
// separately below because two of its one-sided bounds are false.
class TrueStatements : public ::testing::TestWithParam<std::string> {};

TEST_P(TrueStatements, PassOnRandomInstances) {
  for (Index n : {1, 2, 4}) {
    CheckReport r = run_check(GetParam(), n, 60, 7);
    EXPECT_TRUE(r.violations.empty()) << GetParam() << " n=" << n << " worst " << r.worst_margin.value_or(0)
                                      << " first failing part " << (r.violations.empty() ? "" : r.violations[0].assertion);
    EXPECT_EQ(r.skipped, 0u) << GetParam() << " n=" << n;
  }
}

INSTANTIATE_TEST_SUITE_P(AllButReverseAmgm, TrueStatements,
                         ::testing::Values("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11",
                                           "C12", "C13", "C14", "C15", "C16", "C17", "C18", "C19", "C20", "C22",
                                           "C23", "C24"));

TEST(ReverseAmgm, DetectsTheFalseOneSidedBounds) {
  // |T| = diag(1, 4, 16), |T^*| = diag(16, 1, 4): alpha = 1/4, beta = 16 and
  // |T| # |T^*| = diag(4, 2, 8). Then |T^*| <= 2 (|T| # |T^*|) fails in the
  // first coordinate (margin 8 - 16), and so does the average bound
  // (margin 8 - 17/2).
  ComplexMatrix t = ComplexMatrix::Zero(3, 3);
  t(0, 2) = 16.0;
  t(1, 0) = 1.0;
  t(2, 1) = 4.0;
  std::vector<Assertion> as = evaluate_instance("C21", Instance{{{"T", t}}, {}});
  EXPECT_NEAR(find_margin(as, "abs_le_alpha_mean"), 0.0, 1e-9);
  EXPECT_NEAR(find_margin(as, "abs_adjoint_le_beta_mean"), 0.0, 1e-9);
  EXPECT_NEAR(find_margin(as, "abs_adjoint_le_alpha_mean"), -8.0, 1e-9);
  EXPECT_NEAR(find_margin(as, "abs_le_beta_mean"), 4.0, 1e-9);
  EXPECT_NEAR(find_margin(as, "average_le_scaled_mean"), -0.5, 1e-9);
}

TEST(ReverseAmgm, RandomRunReportsViolationsOnlyInTheFalseBounds) {
  CheckReport r = run_check("C21", 3, 100, 42);
  EXPECT_FALSE(r.violations.empty());
  for (const Violation& v : r.violations) {
    EXPECT_TRUE(v.assertion == "abs_adjoint_le_alpha_mean" || v.assertion == "abs_le_beta_mean") << v.assertion;
  }
}

TEST(EvaluateInstance, CyclicWitnessIsAnEqualityCase) {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 1) = 2.0;
  t(1, 0) = 1.0;
  std::vector<Assertion> as = evaluate_instance("C23", Instance{{{"T", t}}, {}});
  ASSERT_EQ(as.size(), 1u);
  EXPECT_NEAR(as[0].margin, 0.0, 1e-10);
}

TEST(EvaluateInstance, MixedSchwarzMidpointEquality) {
  CheckReport r = run_check("C13", 3, 200, 11);
  EXPECT_TRUE(r.passed());
  for (const PartSummary& p : r.parts) {
    if (p.name == "midpoint_equality") EXPECT_GE(p.worst_margin, -1e-9);
  }
}

TEST(RunAll, ZeroTrialsGiveNoReports) { EXPECT_TRUE(run_all(3, 0, 1).empty()); }

TEST(RunAll, CoversEveryCheckInRegistryOrder) {
  std::vector<CheckReport> reports = run_all(2, 3, 5);
  ASSERT_EQ(reports.size(), 24u);
  for (std::size_t i = 0; i < reports.size(); ++i) EXPECT_EQ(reports[i].check_id, registry()[i].id);
}

TEST(Determinism, ReportsAreIndependentOfRunAndThreadCount) {
  RunOptions threaded;
  threaded.threads = 3;
  for (const char* id : {"C7", "C21", "C15"}) {
    std::string a = json_io::report_to_json(run_check(id, 3, 40, 99)).dump();
    std::string b = json_io::report_to_json(run_check(id, 3, 40, 99)).dump();
    std::string c = json_io::report_to_json(run_check(id, 3, 40, 99, Tolerance{}, threaded)).dump();
    EXPECT_EQ(a, b) << id;
    EXPECT_EQ(a, c) << id;
  }
  EXPECT_NE(json_io::report_to_json(run_check("C7", 3, 40, 1)).dump(),
            json_io::report_to_json(run_check("C7", 3, 40, 2)).dump());
}

TEST(Determinism, FixedTEvaluatesOnlyThatWeight) {
  RunOptions opts;
  opts.fixed_t = 0.3;
  CheckReport r = run_check("C7", 2, 5, 3, Tolerance{}, opts);
  EXPECT_TRUE(r.passed());
  EvalContext ctx = eval_context(Instance{}, Tolerance{}, 0.3);
  ASSERT_EQ(ctx.t_values.size(), 1u);
  EXPECT_DOUBLE_EQ(ctx.t_values[0], 0.3);
  EvalContext grid = eval_context(Instance{{}, {{"t", 0.61}}}, Tolerance{}, std::nullopt);
  EXPECT_EQ(grid.t_values.size(), kTGrid.size() + 1);
  EXPECT_DOUBLE_EQ(grid.t_values.back(), 0.61);
}

TEST(Violations, CarryReplayableInstances) {
  CheckReport r = run_check("C21", 3, 50, 42);
  ASSERT_FALSE(r.violations.empty());
  const Violation& v = r.violations.front();
  Instance replay = json_io::instance_from_json(json_io::instance_to_json(v.instance));
  std::vector<Assertion> as = evaluate_instance("C21", replay);
  for (const Assertion& a : as) {
    if (a.name == v.assertion) EXPECT_NEAR(a.normalized(), v.margin, 1e-12);
  }
}

TEST(Violations, ReportInvariantHolds) {
  for (const char* id : {"C5", "C21"}) {
    CheckReport r = run_check(id, 3, 60, 8);
    ASSERT_TRUE(r.worst_margin.has_value());
    EXPECT_EQ(!r.violations.empty(), *r.worst_margin < -pass_threshold(r.tol)) << id;
  }
}

TEST(Aggregate, SkippedTrialsAreNeverPasses) {
  CheckReport r;
  std::vector<detail::TrialOutcome> outcomes(2);
  outcomes[1] = {false, {}, {Assertion{"x", 1.0, 1.0, std::nullopt}}};
  aggregate(r, outcomes);
  EXPECT_EQ(r.skipped, 1u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_FALSE(r.passed());
  EXPECT_DOUBLE_EQ(*r.worst_margin, 1.0);
}

TEST(Aggregate, PartsKeepFirstSeenOrderAndWorstMargin) {
  CheckReport r;
  std::vector<detail::TrialOutcome> outcomes(2);
  outcomes[0] = {false, {}, {Assertion{"b", 0.5, 1.0, std::nullopt}, Assertion{"a", 0.2, 1.0, std::nullopt}}};
  outcomes[1] = {false, {}, {Assertion{"a", 0.1, 1.0, std::nullopt}, Assertion{"b", -4.0, 2.0, std::nullopt}}};
  aggregate(r, outcomes);
  ASSERT_EQ(r.parts.size(), 2u);
  EXPECT_EQ(r.parts[0].name, "b");
  EXPECT_DOUBLE_EQ(r.parts[0].worst_margin, -2.0);
  EXPECT_DOUBLE_EQ(r.parts[1].worst_margin, 0.1);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].trial, 1u);
}

TEST(SemiHypoMix, ExercisesBothOutcomes) {
  int yes = 0;
  int no = 0;
  const CheckSpec& spec = require_check("C15");
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = trial_rng(4, stream_key("C15"), i);
    Instance inst = spec.generate(GenContext{3, Tolerance{}}, rng);
    (semi_hypo_block_iff(inst.matrix("T")).semi_hyponormal ? yes : no)++;
  }
  EXPECT_GT(yes, 30);
  EXPECT_GT(no, 30);
}

TEST(Certify, RejectsInstancesOutsideTheHypothesis) {
  Instance bell = block_instance(bell_block());
  EXPECT_FALSE(certify(Hypothesis::Ppt, bell));
  Instance shift{{{"A", shift_matrix()}, {"B", ComplexMatrix::Identity(2, 2)}}, {}};
  EXPECT_FALSE(certify(Hypothesis::SemiHyponormalPair, shift));
  Instance tight{{{"T", equality_witness()}}, {{"alpha", 0.6}, {"beta", 2.0}}};
  EXPECT_FALSE(certify(Hypothesis::AbNormal, tight));
  tight.scalars["alpha"] = 0.5;
  EXPECT_TRUE(certify(Hypothesis::AbNormal, tight));
}

TEST(NegativeControls, AllControlsPass) {
  CheckReport r = negative_controls(0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.check_id, "controls");
  EXPECT_GE(r.trials, 6u);
  bool saw_bell = false;
  for (const PartSummary& p : r.parts) saw_bell |= p.name == "bell_not_ppt";
  EXPECT_TRUE(saw_bell);
}

}  // namespace
}  // namespace pptm::verify
