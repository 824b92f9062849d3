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

#ifndef PPTM_JSON_IO_HPP
#define PPTM_JSON_IO_HPP

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"
#include "pptm/block_ops.hpp"
#include "pptm/core_linalg.hpp"
#include "pptm/operator_classes.hpp"
#include "pptm/verify/types.hpp"

namespace pptm::json_io {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Matrices: {"n": int, "re": [[...]], "im": [[...]]}, "im" optional on input.
// Non-square matrices (isometries) are written with "rows"/"cols" instead of
// "n".

namespace detail {

inline const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw InvalidInput(where + ": expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(where + ": missing field \"" + key + "\"");
  return *it;
}

inline Eigen::MatrixXd read_real_rows(const Json& rows, Index r, Index c, const std::string& where) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != r) {
    throw InvalidInput(where + ": expected an array of " + std::to_string(r) + " rows");
  }
  Eigen::MatrixXd out(r, c);
  for (Index i = 0; i < r; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != c) {
      throw InvalidInput(row_where + ": expected an array of " + std::to_string(c) + " numbers");
    }
    for (Index j = 0; j < c; ++j) {
      const Json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) throw InvalidInput(row_where + "[" + std::to_string(j) + "]: expected a number");
      out(i, j) = v.get<double>();
      if (!std::isfinite(out(i, j))) throw InvalidInput(row_where + "[" + std::to_string(j) + "]: not finite");
    }
  }
  return out;
}

inline Json write_real_rows(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Reads a square matrix; `where` prefixes every diagnostic (e.g. "A").
inline ComplexMatrix matrix_from_json(const Json& j, const std::string& where = "matrix") {
  const Json& n_field = detail::field(j, "n", where);
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    throw InvalidInput(where + ".n: expected a positive integer");
  }
  const Index n = static_cast<Index>(n_field.get<long long>());
  Eigen::MatrixXd re = detail::read_real_rows(detail::field(j, "re", where), n, n, where + ".re");
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(n, n);
  if (j.contains("im")) im = detail::read_real_rows(j.at("im"), n, n, where + ".im");
  ComplexMatrix out(n, n);
  out.real() = re;
  out.imag() = im;
  return out;
}

inline Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  if (m.rows() == m.cols()) {
    j["n"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  j["re"] = detail::write_real_rows(m.real());
  j["im"] = detail::write_real_rows(m.imag());
  return j;
}

/// Block JSON {"A", "B", "X"} for M = [[A, X^*], [X, B]]; A and B must be
/// Hermitian to 1e-10 relative.
inline Block2x2 block_from_json(const Json& j) {
  auto herm = [&](const char* key) {
    ComplexMatrix m = matrix_from_json(detail::field(j, key, "block"), key);
    return HermMatrix::checked(m, 1e-10 * std::max(1.0, m.cwiseAbs().maxCoeff()), key);
  };
  HermMatrix a = herm("A");
  HermMatrix b = herm("B");
  ComplexMatrix x = matrix_from_json(detail::field(j, "X", "block"), "X");
  return Block2x2(std::move(a), std::move(x), std::move(b));
}

inline Json block_to_json(const Block2x2& b) {
  Json j;
  j["A"] = matrix_to_json(b.a().mat());
  j["B"] = matrix_to_json(b.b().mat());
  j["X"] = matrix_to_json(b.x());
  return j;
}

// ---------------------------------------------------------------------------
// Operator classification and decompositions

inline Json classification_to_json(const ClassificationRecord& rec) {
  Json j;
  j["is_normal"] = rec.is_normal;
  j["is_hyponormal"] = rec.is_hyponormal;
  j["is_semi_hyponormal"] = rec.is_semi_hyponormal;
  j["alpha"] = rec.alpha ? Json(*rec.alpha) : Json(nullptr);
  j["beta"] = rec.beta ? Json(*rec.beta) : Json(nullptr);
  Json margins = Json::object();
  for (const auto& [k, v] : rec.margins) margins[k] = v;
  j["margins"] = std::move(margins);
  return j;
}

// ---------------------------------------------------------------------------
// Verification reports

inline Json instance_to_json(const verify::Instance& inst) {
  Json j;
  Json matrices = Json::object();
  for (const auto& [k, m] : inst.matrices) matrices[k] = matrix_to_json(m);
  Json scalars = Json::object();
  for (const auto& [k, v] : inst.scalars) scalars[k] = v;
  j["matrices"] = std::move(matrices);
  j["scalars"] = std::move(scalars);
  return j;
}

inline verify::Instance instance_from_json(const Json& j) {
  verify::Instance inst;
  if (j.contains("matrices")) {
    for (const auto& [k, m] : j.at("matrices").items()) inst.matrices[k] = matrix_from_json(m, "matrices." + k);
  }
  if (j.contains("scalars")) {
    for (const auto& [k, v] : j.at("scalars").items()) {
      if (!v.is_number()) throw InvalidInput("scalars." + k + ": expected a number");
      inst.scalars[k] = v.get<double>();
    }
  }
  return inst;
}

/// Report in schema order. `wall_ms` is included only on request so that
/// reports for a fixed invocation stay byte-identical.
inline Json report_to_json(const verify::CheckReport& r, bool include_timing = false) {
  Json j;
  j["check_id"] = r.check_id;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["tol"] = Json{{"atol", r.tol.atol()}, {"rtol", r.tol.rtol()}};
  j["worst_margin"] = r.worst_margin ? Json(*r.worst_margin) : Json(nullptr);
  Json violations = Json::array();
  for (const verify::Violation& v : r.violations) {
    Json jv;
    jv["trial"] = v.trial;
    jv["margin"] = v.margin;
    jv["assertion"] = v.assertion;
    jv["t"] = v.t ? Json(*v.t) : Json(nullptr);
    jv["instance"] = instance_to_json(v.instance);
    violations.push_back(std::move(jv));
  }
  j["violations"] = std::move(violations);
  j["skipped"] = r.skipped;
  Json parts = Json::object();
  for (const verify::PartSummary& p : r.parts) parts[p.name] = p.worst_margin;
  j["parts"] = std::move(parts);
  j["passed"] = r.passed();
  if (include_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

inline Json reports_to_json(const std::vector<verify::CheckReport>& reports, bool include_timing = false) {
  Json arr = Json::array();
  for (const verify::CheckReport& r : reports) arr.push_back(report_to_json(r, include_timing));
  return arr;
}

}  // namespace pptm::json_io

#endif  // PPTM_JSON_IO_HPP
