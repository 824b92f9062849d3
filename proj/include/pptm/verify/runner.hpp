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

#ifndef PPTM_VERIFY_RUNNER_HPP
#define PPTM_VERIFY_RUNNER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pptm/block_ops.hpp"
#include "pptm/core_linalg.hpp"
#include "pptm/errors.hpp"
#include "pptm/matrix_means.hpp"
#include "pptm/operator_classes.hpp"
#include "pptm/random.hpp"
#include "pptm/verify/assertions.hpp"
#include "pptm/verify/registry.hpp"
#include "pptm/verify/types.hpp"

namespace pptm::verify {

/// Weights evaluated on every trial in addition to the trial's random t.
inline const std::vector<double> kTGrid{0.0, 0.25, 0.5, 0.75, 1.0};

struct RunOptions {
  /// Evaluate only this weight instead of the grid plus a random t.
  std::optional<double> fixed_t;
  /// Worker threads; results never depend on this value.
  unsigned threads = 1;
  /// Extra draws allowed when a generated instance fails certification.
  int max_regenerations = 8;
};

/// Re-certifies the hypothesis of `h` on `inst` at the precondition tolerance.
inline bool certify(Hypothesis h, const Instance& inst) {
  const Tolerance& tol = kPreconditionTolerance;
  switch (h) {
    case Hypothesis::PsdBlock:
    case Hypothesis::HermitianPsdBlock:
    case Hypothesis::Ppt: {
      Block2x2 b = instance_block(inst);
      if (!is_positive_definite(b.a()) || !is_positive_definite(b.b())) return false;
      if (h == Hypothesis::Ppt) return is_ppt(b, tol).holds;
      if (h == Hypothesis::HermitianPsdBlock &&
          hermitian_deviation(b.x()) > 1e-12 * std::max(1.0, op_norm(b.x()))) {
        return false;
      }
      return is_psd(b.assemble(), tol).holds;
    }
    case Hypothesis::PdPair:
      return is_positive_definite(instance_herm(inst, "A")) && is_positive_definite(instance_herm(inst, "B"));
    case Hypothesis::SemiHyponormalPair:
      return classify(inst.matrix("A"), tol).is_semi_hyponormal && classify(inst.matrix("B"), tol).is_semi_hyponormal;
    case Hypothesis::AbNormal:
      return is_ab_normal(inst.matrix("T"), inst.scalar("alpha"), inst.scalar("beta"), tol).holds();
    case Hypothesis::GeneralT:
      return true;
  }
  return false;
}

inline EvalContext eval_context(const Instance& inst, const Tolerance& tol, const std::optional<double>& fixed_t) {
  EvalContext ctx{tol, {}};
  if (fixed_t) {
    ctx.t_values = {*fixed_t};
  } else {
    ctx.t_values = kTGrid;
    if (inst.has_scalar("t")) ctx.t_values.push_back(inst.scalar("t"));
  }
  return ctx;
}

/// Evaluates check `id` on a caller-supplied instance. (alpha, beta) are
/// attached from "T" when the check needs them and they are absent.
inline std::vector<Assertion> evaluate_instance(const std::string& id, Instance inst, const Tolerance& tol = Tolerance{},
                                                const std::optional<double>& fixed_t = std::nullopt) {
  const CheckSpec& spec = require_check(id);
  if (spec.hypothesis == Hypothesis::AbNormal) attach_tight_parameters(inst);
  return spec.evaluate(inst, eval_context(inst, tol, fixed_t));
}

namespace detail {

struct TrialOutcome {
  bool skipped = true;
  Instance instance;
  std::vector<Assertion> assertions;
};

inline TrialOutcome run_trial(const CheckSpec& spec, Index n, std::uint64_t seed, std::size_t trial,
                              const Tolerance& tol, const RunOptions& opts) {
  Rng rng = trial_rng(seed, stream_key(spec.id), trial);
  GenContext gen{n, tol};
  TrialOutcome out;
  for (int attempt = 0; attempt <= opts.max_regenerations; ++attempt) {
    Instance inst;
    try {
      inst = spec.generate(gen, rng);
      inst.scalars["t"] = opts.fixed_t ? *opts.fixed_t : uniform(rng, 0.0, 1.0);
      if (!certify(spec.hypothesis, inst)) continue;
    } catch (const Error&) {
      continue;
    }
    out.instance = std::move(inst);
    try {
      out.assertions = spec.evaluate(out.instance, eval_context(out.instance, tol, opts.fixed_t));
      out.skipped = false;
    } catch (const Error&) {
      out.skipped = true;  // a certified instance the check could not evaluate
    }
    return out;
  }
  return out;
}

}  // namespace detail

/// Folds per-trial outcomes into `report` in trial order.
inline void aggregate(CheckReport& report, std::vector<detail::TrialOutcome>& outcomes) {
  const double threshold = pass_threshold(report.tol);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    detail::TrialOutcome& o = outcomes[i];
    if (o.skipped) {
      ++report.skipped;
      continue;
    }
    for (const Assertion& a : o.assertions) {
      double m = a.normalized();
      report.worst_margin = report.worst_margin ? std::min(*report.worst_margin, m) : m;
      auto part = std::find_if(report.parts.begin(), report.parts.end(),
                               [&](const PartSummary& p) { return p.name == a.name; });
      if (part == report.parts.end()) {
        report.parts.push_back({a.name, m});
      } else {
        part->worst_margin = std::min(part->worst_margin, m);
      }
      if (m < -threshold) report.violations.push_back({i, m, a.name, a.t, o.instance});
    }
  }
}

inline CheckReport run_check(const std::string& id, Index n, std::size_t trials, std::uint64_t seed,
                             const Tolerance& tol = Tolerance{}, const RunOptions& opts = {}) {
  const CheckSpec& spec = require_check(id);
  if (n < 1 || n > 8) throw InvalidInput("dimension n must lie in [1, 8]");
  if (opts.fixed_t && !(*opts.fixed_t >= 0.0 && *opts.fixed_t <= 1.0)) throw InvalidInput("t must lie in [0, 1]");
  auto start = std::chrono::steady_clock::now();

  std::vector<detail::TrialOutcome> outcomes(trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < trials; ++i) outcomes[i] = detail::run_trial(spec, n, seed, i, tol, opts);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < trials; i += workers) outcomes[i] = detail::run_trial(spec, n, seed, i, tol, opts);
      });
    }
  }

  CheckReport report;
  report.check_id = spec.id;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  aggregate(report, outcomes);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// One report per registered check, in registry order; empty when trials = 0.
inline std::vector<CheckReport> run_all(Index n, std::size_t trials, std::uint64_t seed,
                                        const Tolerance& tol = Tolerance{}, const RunOptions& opts = {}) {
  std::vector<CheckReport> reports;
  if (trials == 0) return reports;
  for (const CheckSpec& spec : registry()) reports.push_back(run_check(spec.id, n, trials, seed, tol, opts));
  return reports;
}

// ---------------------------------------------------------------------------
// Negative controls: the samplers and predicates must be able to say "no".

/// Bell state (|00> + |11>)/sqrt(2) as a 2 x 2 block of 2 x 2 matrices.
inline Block2x2 bell_block() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return Block2x2::from_assembled(HermMatrix(m));
}

inline ComplexMatrix shift_matrix() {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 1) = 1.0;
  return t;
}

inline ComplexMatrix equality_witness() {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 1) = 2.0;
  t(1, 0) = 1.0;
  return t;
}

/// Runs the fixed and seeded controls; throws SuiteSelfTestFailure naming
/// every control that failed.
inline CheckReport negative_controls(std::uint64_t seed, const Tolerance& tol = Tolerance{}) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Assertion> checks;

  // Entangled block: PSD but its partial transpose has eigenvalue -1/2.
  PptCertificate bell = is_ppt(bell_block(), tol);
  checks.push_back(holds("bell_psd", is_psd(bell_block().assemble(), tol).holds));
  checks.push_back(holds("bell_not_ppt", !bell.holds));
  checks.push_back(within("bell_transposed_eigenvalue", std::abs(bell.transposed_margin + 0.5), 1e-12));

  // Nilpotent shift: neither side of the characterization holds.
  SemiHypoEquivalence shift = semi_hypo_block_iff(shift_matrix(), tol);
  checks.push_back(holds("shift_not_semi_hyponormal", !shift.semi_hyponormal));
  checks.push_back(holds("shift_block_not_psd", !shift.block_psd));

  // Equality witness for the reverse norm-square bound.
  std::vector<Assertion> witness = evaluate_instance("C23", Instance{{{"T", equality_witness()}}, {}}, tol);
  checks.push_back(within("witness_margin_zero", std::abs(witness.front().margin), 1e-10));

  // Seeded samplers must reach the negative side of their predicates.
  Rng rng = trial_rng(seed, stream_key("controls"), 0);
  bool found_non_ppt = false;
  for (int i = 0; i < 64 && !found_non_ppt; ++i) found_non_ppt = !is_ppt(random_psd_block(2, rng), tol).holds;
  checks.push_back(holds("sampler_psd_not_ppt", found_non_ppt));
  bool found_non_semi = false;
  for (int i = 0; i < 64 && !found_non_semi; ++i) {
    found_non_semi = !classify(gaussian_matrix(3, 3, rng), tol).is_semi_hyponormal;
  }
  checks.push_back(holds("sampler_not_semi_hyponormal", found_non_semi));

  CheckReport report;
  report.check_id = "controls";
  report.n = 2;
  report.trials = checks.size();
  report.seed = seed;
  report.tol = tol;
  std::vector<detail::TrialOutcome> outcomes;
  for (Assertion& a : checks) outcomes.push_back({false, {}, {a}});
  aggregate(report, outcomes);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!report.violations.empty()) {
    std::string names;
    for (const Violation& v : report.violations) names += (names.empty() ? "" : ", ") + v.assertion;
    throw SuiteSelfTestFailure("negative controls failed: " + names);
  }
  return report;
}

}  // namespace pptm::verify

#endif  // PPTM_VERIFY_RUNNER_HPP
