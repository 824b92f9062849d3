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

#ifndef PPTM_VERIFY_ASSERTIONS_HPP
#define PPTM_VERIFY_ASSERTIONS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "pptm/core_linalg.hpp"
#include "pptm/verify/types.hpp"

namespace pptm::verify {

/// lhs <= rhs in the Loewner order; margin lambda_min(rhs - lhs).
inline Assertion order_le(std::string name, const HermMatrix& lhs, const HermMatrix& rhs,
                          std::optional<double> t = std::nullopt) {
  double margin = lambda_min(rhs - lhs);
  double scale = std::max(op_norm(lhs), op_norm(rhs));
  return {std::move(name), margin, scale, t};
}

/// Scalar lhs <= rhs (norm statements); margin rhs - lhs.
inline Assertion scalar_le(std::string name, double lhs, double rhs, std::optional<double> t = std::nullopt) {
  return {std::move(name), rhs - lhs, std::max(std::abs(lhs), std::abs(rhs)), t};
}

/// lambda_j(h) <= lambda_j(p) for every j, both spectra sorted descending;
/// margin min_j (lambda_j(p) - lambda_j(h)).
inline Assertion eigen_le(std::string name, const HermMatrix& h, const HermMatrix& p,
                          std::optional<double> t = std::nullopt) {
  if (h.size() != p.size()) throw InvalidInput("eigenvalue comparison: dimension mismatch");
  RealVector lh = eigenvalues(h);
  RealVector lp = eigenvalues(p);
  double margin = (lp - lh).minCoeff();
  double scale = std::max(op_norm(h), op_norm(p));
  return {std::move(name), margin, scale, t};
}

/// m >= O; margin lambda_min(m).
inline Assertion psd(std::string name, const HermMatrix& m, std::optional<double> t = std::nullopt) {
  return {std::move(name), lambda_min(m), op_norm(m), t};
}

/// Two decisions that must agree; margin 0 when they do and -1 otherwise.
inline Assertion agree(std::string name, bool lhs, bool rhs, std::optional<double> t = std::nullopt) {
  return {std::move(name), lhs == rhs ? 0.0 : -1.0, 1.0, t};
}

/// A decision that must be true; margin 0 or -1.
inline Assertion holds(std::string name, bool value, std::optional<double> t = std::nullopt) {
  return {std::move(name), value ? 0.0 : -1.0, 1.0, t};
}

/// value <= bound for a dimensionless quantity (residuals, defects).
inline Assertion within(std::string name, double value, double bound, std::optional<double> t = std::nullopt) {
  return {std::move(name), bound - value, 1.0, t};
}

/// lhs == rhs; margin -|lhs - rhs| relative to their size.
inline Assertion equal(std::string name, double lhs, double rhs, std::optional<double> t = std::nullopt) {
  return {std::move(name), -std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)), t};
}

}  // namespace pptm::verify

#endif  // PPTM_VERIFY_ASSERTIONS_HPP
