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

#ifndef PPTM_VERIFY_TYPES_HPP
#define PPTM_VERIFY_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pptm/core_linalg.hpp"
#include "pptm/random.hpp"

namespace pptm::verify {

/// One generated input: named matrices plus named scalars. Ordered maps keep
/// serialization stable.
struct Instance {
  std::map<std::string, ComplexMatrix> matrices;
  std::map<std::string, double> scalars;

  const ComplexMatrix& matrix(const std::string& name) const {
    auto it = matrices.find(name);
    if (it == matrices.end()) throw InvalidInput("instance has no matrix '" + name + "'");
    return it->second;
  }
  double scalar(const std::string& name) const {
    auto it = scalars.find(name);
    if (it == scalars.end()) throw InvalidInput("instance has no scalar '" + name + "'");
    return it->second;
  }
  bool has_scalar(const std::string& name) const { return scalars.count(name) != 0; }
};

/// Signed slack of one inequality. `margin` >= 0 means the statement holds;
/// `scale` is the magnitude of the compared quantities.
struct Assertion {
  std::string name;
  double margin;
  double scale;
  std::optional<double> t;

  /// margin / max(1, scale): comparable across instances of any size.
  double normalized() const { return margin / std::max(1.0, scale); }
};

/// Instance families a check may assume.
enum class Hypothesis {
  PsdBlock,           // [[A, X^*], [X, B]] >= O with A, B > O
  HermitianPsdBlock,  // as above with X = X^*
  Ppt,                // both arrangements PSD, A, B > O
  PdPair,             // A, B > O
  SemiHyponormalPair, // A, B semi-hyponormal
  AbNormal,           // invertible T with its tight (alpha, beta)
  GeneralT,           // any square T
};

inline const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::PsdBlock: return "psd-block";
    case Hypothesis::HermitianPsdBlock: return "psd-block-hermitian-x";
    case Hypothesis::Ppt: return "ppt";
    case Hypothesis::PdPair: return "pd-pair";
    case Hypothesis::SemiHyponormalPair: return "semi-hyponormal";
    case Hypothesis::AbNormal: return "alpha-beta-normal";
    case Hypothesis::GeneralT: return "general-t";
  }
  return "unknown";
}

struct GenContext {
  Index n;
  Tolerance tol;
};

struct EvalContext {
  Tolerance tol;
  /// Weights t at which parameterized statements are evaluated.
  std::vector<double> t_values;
};

struct CheckSpec {
  std::string id;
  std::string name;
  Hypothesis hypothesis;
  std::string statement;
  std::function<Instance(const GenContext&, Rng&)> generate;
  std::function<std::vector<Assertion>(const Instance&, const EvalContext&)> evaluate;
};

struct Violation {
  std::size_t trial;
  double margin;
  std::string assertion;
  std::optional<double> t;
  Instance instance;
};

/// Worst normalized margin of one named assertion across all trials.
struct PartSummary {
  std::string name;
  double worst_margin;
};

struct CheckReport {
  std::string check_id;
  Index n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Tolerance tol;
  /// Minimum normalized margin; empty when no trial was evaluated.
  std::optional<double> worst_margin;
  std::vector<Violation> violations;
  /// Trials whose hypothesis could not be certified; never counted as passes.
  std::size_t skipped = 0;
  std::vector<PartSummary> parts;
  double wall_ms = 0.0;

  bool passed() const { return violations.empty() && skipped == 0; }
};

/// A normalized margin passes when it is >= -(atol + rtol).
inline double pass_threshold(const Tolerance& tol) { return tol.atol() + tol.rtol(); }

}  // namespace pptm::verify

#endif  // PPTM_VERIFY_TYPES_HPP
