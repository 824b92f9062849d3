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

#ifndef PPTM_OPERATOR_CLASSES_HPP
#define PPTM_OPERATOR_CLASSES_HPP

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pptm/block_ops.hpp"
#include "pptm/core_linalg.hpp"

namespace pptm {

/// |T| = (T^* T)^{1/2} and |T^*| = (T T^*)^{1/2}.
struct AbsParts {
  HermMatrix abs;
  HermMatrix abs_adjoint;
};

inline AbsParts abs_parts(const ComplexMatrix& t) {
  require_square(t, "T");
  require_finite(t, "T");
  return {abs_matrix(t), abs_matrix(t.adjoint())};
}

struct ClassificationRecord {
  bool is_normal = false;
  bool is_hyponormal = false;
  bool is_semi_hyponormal = false;
  /// Tight parameters; empty when T is singular.
  std::optional<double> alpha;
  std::optional<double> beta;
  std::map<std::string, double> margins;
};

/// Tight (alpha, beta) from the pencil (|T^*|^2, |T|^2): the square roots of
/// the extreme eigenvalues of |T|^{-1} |T^*|^2 |T|^{-1}. Empty if T is
/// singular at `tol`.
struct PencilBounds {
  double alpha;
  double beta;
  double eigen_product;  // equals 1 in exact arithmetic
};

inline std::optional<PencilBounds> tight_parameters(const ComplexMatrix& t, const Tolerance& tol = Tolerance{}) {
  require_square(t, "T");
  RealVector sv = Eigen::JacobiSVD<ComplexMatrix>(t).singularValues();
  if (!(sv(sv.size() - 1) > tol.threshold(sv(0)))) return std::nullopt;
  ComplexMatrix inv_abs = mat_pow(HermMatrix(t.adjoint() * t), -0.5).mat();
  HermMatrix pencil(inv_abs * (t * t.adjoint()) * inv_abs);
  RealVector mu = eigenvalues(pencil);
  double product = mu.prod();
  // The extreme pencil eigenvalues straddle 1 because their product is 1.
  double alpha = std::min(1.0, std::sqrt(std::max(mu(mu.size() - 1), 0.0)));
  double beta = std::max(1.0, std::sqrt(mu(0)));
  return PencilBounds{alpha, beta, product};
}

inline ClassificationRecord classify(const ComplexMatrix& t, const Tolerance& tol = Tolerance{}) {
  AbsParts parts = abs_parts(t);
  HermMatrix gram(t.adjoint() * t);
  HermMatrix cogram(t * t.adjoint());

  ClassificationRecord rec;
  OrderCertificate hypo = loewner_leq(cogram, gram, tol);
  OrderCertificate reverse_hypo = loewner_leq(gram, cogram, tol);
  OrderCertificate semi = loewner_leq(parts.abs_adjoint, parts.abs, tol);
  rec.is_normal = hypo.holds && reverse_hypo.holds;
  rec.is_hyponormal = hypo.holds;
  // Hyponormal implies semi-hyponormal (square root is operator monotone);
  // the square-root margin can lose that to round-off near singular T.
  rec.is_semi_hyponormal = semi.holds || hypo.holds;
  rec.margins["normal"] = std::min(hypo.margin, reverse_hypo.margin);
  rec.margins["hyponormal"] = hypo.margin;
  rec.margins["semi_hyponormal"] = semi.margin;

  if (auto bounds = tight_parameters(t, tol)) {
    rec.alpha = bounds->alpha;
    rec.beta = bounds->beta;
    rec.margins["pencil_product"] = bounds->eigen_product;
  }
  return rec;
}

/// Both sides of: [[|T|, T^*], [T, |T|]] >= O  iff  T is semi-hyponormal.
struct SemiHypoEquivalence {
  bool block_psd;
  bool semi_hyponormal;
  double block_margin;
  double order_margin;
};

inline Block2x2 semi_hypo_block(const ComplexMatrix& t) {
  HermMatrix abs = abs_matrix(t);
  return Block2x2(abs, t, abs);
}

inline SemiHypoEquivalence semi_hypo_block_iff(const ComplexMatrix& t, const Tolerance& tol = Tolerance{}) {
  OrderCertificate block = is_psd(semi_hypo_block(t).assemble(), tol);
  AbsParts parts = abs_parts(t);
  OrderCertificate order = loewner_leq(parts.abs_adjoint, parts.abs, tol);
  return {block.holds, order.holds, block.margin, order.margin};
}

/// Order predicates alpha^2 |T|^2 <= |T^*|^2 and |T^*|^2 <= beta^2 |T|^2.
struct AbNormalCertificate {
  OrderCertificate lower;
  OrderCertificate upper;
  bool holds() const noexcept { return lower.holds && upper.holds; }
};

inline void require_ab_range(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= 1.0 && beta >= 1.0 && std::isfinite(beta))) {
    throw InvalidInput("(alpha, beta) must satisfy 0 < alpha <= 1 <= beta");
  }
}

inline AbNormalCertificate is_ab_normal(const ComplexMatrix& t, double alpha, double beta,
                                        const Tolerance& tol = Tolerance{}) {
  require_ab_range(alpha, beta);
  HermMatrix gram(t.adjoint() * t);
  HermMatrix cogram(t * t.adjoint());
  return {loewner_leq(alpha * alpha * gram, cogram, tol), loewner_leq(cogram, beta * beta * gram, tol)};
}

enum class AbBlockVariant { Squared, Linear, Schwarz };

struct NamedBlock {
  std::string name;
  Block2x2 block;
  OrderCertificate psd;
};

/// Block matrices whose positivity characterizes (alpha, beta)-normality.
///  Squared: [[Q2/a, P2], [P2, P2/a]], [[b P2, Q2], [Q2, b Q2]] and
///           [[Q2/a^2, P2], [P2, Q2/a^2]], [[b^2 P2, Q2], [Q2, b^2 P2]]
///  Linear:  [[Q/sqrt(a), P], [P, P/sqrt(a)]], [[sqrt(b) P, Q], [Q, sqrt(b) Q]]
///  Schwarz: [[Q/sqrt(a), T^*], [T, Q/sqrt(a)]], [[sqrt(b) P, T^*], [T, sqrt(b) P]]
/// with P = |T|, Q = |T^*|, P2 = |T|^2, Q2 = |T^*|^2.
inline std::vector<NamedBlock> ab_normal_blocks(const ComplexMatrix& t, double alpha, double beta,
                                                AbBlockVariant variant, const Tolerance& tol = Tolerance{}) {
  require_ab_range(alpha, beta);
  AbsParts parts = abs_parts(t);
  const HermMatrix& p = parts.abs;
  const HermMatrix& q = parts.abs_adjoint;
  std::vector<Block2x2> blocks;
  std::vector<std::string> names;
  switch (variant) {
    case AbBlockVariant::Squared: {
      HermMatrix p2(t.adjoint() * t);
      HermMatrix q2(t * t.adjoint());
      blocks.emplace_back((1.0 / alpha) * q2, p2.mat(), (1.0 / alpha) * p2);
      blocks.emplace_back(beta * p2, q2.mat(), beta * q2);
      blocks.emplace_back((1.0 / (alpha * alpha)) * q2, p2.mat(), (1.0 / (alpha * alpha)) * q2);
      blocks.emplace_back((beta * beta) * p2, q2.mat(), (beta * beta) * p2);
      names = {"squared_alpha", "squared_beta", "squared2_alpha", "squared2_beta"};
      break;
    }
    case AbBlockVariant::Linear: {
      double ia = 1.0 / std::sqrt(alpha);
      double sb = std::sqrt(beta);
      blocks.emplace_back(ia * q, p.mat(), ia * p);
      blocks.emplace_back(sb * p, q.mat(), sb * q);
      names = {"linear_alpha", "linear_beta"};
      break;
    }
    case AbBlockVariant::Schwarz: {
      double ia = 1.0 / std::sqrt(alpha);
      double sb = std::sqrt(beta);
      blocks.emplace_back(ia * q, t, ia * q);
      blocks.emplace_back(sb * p, t, sb * p);
      names = {"schwarz_alpha", "schwarz_beta"};
      break;
    }
  }
  std::vector<NamedBlock> out;
  out.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    OrderCertificate cert = is_psd(blocks[i].assemble(), tol);
    out.push_back({names[i], std::move(blocks[i]), cert});
  }
  return out;
}

// Positive linear maps. All four families are completely positive.

/// X -> V X V^*.
struct Congruence {
  ComplexMatrix v;
};
/// X -> sum_i V_i X V_i^*.
struct SumOfCongruences {
  std::vector<ComplexMatrix> vs;
};
/// X -> leading k x k principal block.
struct Compression {
  Index k;
};
/// X -> (tr X / n) I.
struct TraceMap {};

using PositiveMap = std::variant<Congruence, SumOfCongruences, Compression, TraceMap>;

inline std::string map_name(const PositiveMap& map) {
  struct Namer {
    std::string operator()(const Congruence&) const { return "congruence"; }
    std::string operator()(const SumOfCongruences&) const { return "sum_of_congruences"; }
    std::string operator()(const Compression&) const { return "compression"; }
    std::string operator()(const TraceMap&) const { return "trace_map"; }
  };
  return std::visit(Namer{}, map);
}

inline ComplexMatrix positive_map_apply(const PositiveMap& map, const ComplexMatrix& x) {
  require_square(x, "positive map argument");
  const Index n = x.rows();
  struct Applier {
    const ComplexMatrix& x;
    Index n;
    ComplexMatrix operator()(const Congruence& c) const {
      if (c.v.cols() != n || c.v.rows() == 0) throw InvalidInput("congruence factor has wrong shape");
      return c.v * x * c.v.adjoint();
    }
    ComplexMatrix operator()(const SumOfCongruences& s) const {
      if (s.vs.empty()) throw InvalidInput("sum_of_congruences needs at least one factor");
      const Index m = s.vs.front().rows();
      ComplexMatrix out = ComplexMatrix::Zero(m, m);
      for (const ComplexMatrix& v : s.vs) {
        if (v.cols() != n || v.rows() != m || m == 0) {
          throw InvalidInput("sum_of_congruences factor has wrong shape");
        }
        out += v * x * v.adjoint();
      }
      return out;
    }
    ComplexMatrix operator()(const Compression& c) const {
      if (c.k < 1 || c.k > n) throw InvalidInput("compression size out of range");
      return x.topLeftCorner(c.k, c.k);
    }
    ComplexMatrix operator()(const TraceMap&) const {
      return (x.trace() / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
    }
  };
  return std::visit(Applier{x, n}, map);
}

}  // namespace pptm

#endif  // PPTM_OPERATOR_CLASSES_HPP
