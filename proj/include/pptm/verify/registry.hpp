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

#ifndef PPTM_VERIFY_REGISTRY_HPP
#define PPTM_VERIFY_REGISTRY_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pptm/block_ops.hpp"
#include "pptm/core_linalg.hpp"
#include "pptm/matrix_means.hpp"
#include "pptm/operator_classes.hpp"
#include "pptm/random.hpp"
#include "pptm/verify/assertions.hpp"
#include "pptm/verify/types.hpp"

namespace pptm::verify {

/// Condition-number cap of the invertible T behind (alpha, beta)-normal
/// instances; |T|^2 then stays within the 1e6 operand cap.
inline constexpr double kAbConditionCap = 1e3;

// ---------------------------------------------------------------------------
// Instance <-> domain objects

inline Instance block_instance(const Block2x2& b) {
  Instance inst;
  inst.matrices["A"] = b.a().mat();
  inst.matrices["B"] = b.b().mat();
  inst.matrices["X"] = b.x();
  return inst;
}

inline Block2x2 instance_block(const Instance& inst) {
  return Block2x2(HermMatrix::checked(inst.matrix("A"), 1e-10 * std::max(1.0, op_norm(inst.matrix("A"))), "A"),
                  inst.matrix("X"),
                  HermMatrix::checked(inst.matrix("B"), 1e-10 * std::max(1.0, op_norm(inst.matrix("B"))), "B"));
}

inline HermMatrix instance_herm(const Instance& inst, const std::string& name) {
  const ComplexMatrix& m = inst.matrix(name);
  return HermMatrix::checked(m, 1e-10 * std::max(1.0, op_norm(m)), name.c_str());
}

/// Attaches the tight (alpha, beta) of instance matrix "T" unless present.
inline void attach_tight_parameters(Instance& inst) {
  if (inst.has_scalar("alpha") && inst.has_scalar("beta")) return;
  auto bounds = tight_parameters(inst.matrix("T"));
  if (!bounds) throw SingularMatrix("T is singular; (alpha, beta) are undefined");
  inst.scalars["alpha"] = bounds->alpha;
  inst.scalars["beta"] = bounds->beta;
}

// ---------------------------------------------------------------------------
// Generators, one per hypothesis family

inline Instance gen_psd_block(const GenContext& ctx, Rng& rng) { return block_instance(random_psd_block(ctx.n, rng)); }

inline Instance gen_hermitian_x_block(const GenContext& ctx, Rng& rng) {
  return block_instance(random_hermitian_x_block(ctx.n, rng));
}

inline Instance gen_ppt_block(const GenContext& ctx, Rng& rng) { return block_instance(random_ppt_block(ctx.n, rng)); }

inline Instance gen_pd_pair(const GenContext& ctx, Rng& rng) {
  Instance inst;
  inst.matrices["A"] = random_pd(ctx.n, rng).mat();
  inst.matrices["B"] = random_pd(ctx.n, rng).mat();
  return inst;
}

/// In finite dimension semi-hyponormal means normal, so pairs of normal
/// matrices are drawn.
inline Instance gen_semi_hyponormal_pair(const GenContext& ctx, Rng& rng) {
  Instance inst;
  inst.matrices["A"] = random_normal(ctx.n, rng);
  inst.matrices["B"] = random_normal(ctx.n, rng);
  return inst;
}

/// Every invertible T is (alpha, beta)-normal at its tight parameters.
inline Instance gen_ab_normal(const GenContext& ctx, Rng& rng) {
  Instance inst;
  inst.matrices["T"] = random_invertible(ctx.n, rng, kAbConditionCap);
  attach_tight_parameters(inst);
  return inst;
}

/// Gaussian T with exponents (alpha, beta) uniform on the triangle
/// {alpha, beta in [0, 1], alpha + beta >= 1}.
inline Instance gen_mixed_schwarz(const GenContext& ctx, Rng& rng) {
  Instance inst;
  inst.matrices["T"] = gaussian_matrix(ctx.n, ctx.n, rng);
  double a = uniform(rng, 0.0, 1.0);
  double b = uniform(rng, 0.0, 1.0);
  if (a + b < 1.0) {  // reflect the lower triangle onto the upper one
    a = 1.0 - a;
    b = 1.0 - b;
  }
  inst.scalars["alpha"] = a;
  inst.scalars["beta"] = b;
  return inst;
}

/// Mixture exercising both outcomes of the semi-hyponormality test: normal,
/// normal within tolerance, generic, singular, nilpotent and singular normal.
inline Instance gen_semi_hypo_mix(const GenContext& ctx, Rng& rng) {
  const Index n = ctx.n;
  Instance inst;
  int kind = std::uniform_int_distribution<int>(0, 5)(rng);
  ComplexMatrix t;
  switch (kind) {
    case 0:
      t = random_normal(n, rng);
      break;
    case 1: {
      ComplexMatrix g = gaussian_matrix(n, n, rng);
      double eps = 0.1 * ctx.tol.atol() * uniform(rng, 0.0, 1.0) / std::max(1.0, op_norm(g));
      t = random_normal(n, rng) + eps * g;
      break;
    }
    case 2:
      t = gaussian_matrix(n, n, rng);
      break;
    case 3: {
      Index r = n > 1 ? std::uniform_int_distribution<Index>(1, n - 1)(rng) : 0;
      t = r > 0 ? ComplexMatrix(gaussian_matrix(n, r, rng) * gaussian_matrix(r, n, rng))
                : ComplexMatrix::Zero(n, n);
      break;
    }
    case 4:
      t = gaussian_matrix(n, n, rng).triangularView<Eigen::StrictlyUpper>();
      break;
    default: {
      Eigen::VectorXcd z(n);
      for (Index i = 0; i < n; ++i) {
        z(i) = i == 0 ? Complex(0.0, 0.0)
                      : std::polar(uniform(rng, 0.5, 2.0), uniform(rng, -std::numbers::pi, std::numbers::pi));
      }
      ComplexMatrix u = haar_unitary(n, rng);
      t = u * z.asDiagonal() * u.adjoint();
      break;
    }
  }
  inst.matrices["T"] = t;
  inst.scalars["family"] = kind;
  return inst;
}

/// (alpha, beta)-normal T plus a completely positive map drawn from the
/// map library: kind 0 congruence, 1 sum of congruences, 2 compression,
/// 3 trace map.
inline Instance gen_ab_normal_with_map(const GenContext& ctx, Rng& rng) {
  Instance inst = gen_ab_normal(ctx, rng);
  int kind = std::uniform_int_distribution<int>(0, 3)(rng);
  inst.scalars["map_kind"] = kind;
  if (kind == 0) {
    inst.matrices["V0"] = random_invertible(ctx.n, rng, kAbConditionCap);
  } else if (kind == 1) {
    int count = std::uniform_int_distribution<int>(2, 3)(rng);
    for (int i = 0; i < count; ++i) inst.matrices["V" + std::to_string(i)] = gaussian_matrix(ctx.n, ctx.n, rng);
  } else if (kind == 2) {
    inst.scalars["k"] = static_cast<double>(std::uniform_int_distribution<Index>(1, ctx.n)(rng));
  }
  return inst;
}

inline PositiveMap instance_map(const Instance& inst) {
  switch (static_cast<int>(inst.scalar("map_kind"))) {
    case 0: return Congruence{inst.matrix("V0")};
    case 1: {
      SumOfCongruences s;
      for (int i = 0; inst.matrices.count("V" + std::to_string(i)) != 0; ++i) s.vs.push_back(inst.matrix("V" + std::to_string(i)));
      return s;
    }
    case 2: return Compression{static_cast<Index>(inst.scalar("k"))};
    case 3: return TraceMap{};
    default: throw InvalidInput("unknown map_kind");
  }
}

// ---------------------------------------------------------------------------
// Shared helpers

inline HermMatrix mean_t(const HermMatrix& a, const HermMatrix& b, double t) {
  return geometric_mean_t(a, b, MeanParams(t));
}

/// The halves of the polar decomposition X = U |X| plus |X^*|.
struct PolarView {
  ComplexMatrix u;
  HermMatrix abs;
  HermMatrix abs_adjoint;
};

inline PolarView polar_view(const ComplexMatrix& x) {
  PolarParts p = polar(x);
  return {p.unitary, p.positive, abs_matrix(x.adjoint())};
}

// ---------------------------------------------------------------------------
// Checks

inline std::vector<Assertion> eval_norm_sum(const Instance& inst, const EvalContext&) {
  Block2x2 b = instance_block(inst);
  return {scalar_le("norm_sum", op_norm(b.assemble()), op_norm(b.a()) + op_norm(b.b()))};
}

inline std::vector<Assertion> eval_hiroshima(const Instance& inst, const EvalContext&) {
  Block2x2 b = instance_block(inst);
  return {scalar_le("hermitian_x_norm", op_norm(b.assemble()), op_norm(b.a() + b.b()))};
}

inline std::vector<Assertion> eval_lee_mean_bound(const Instance& inst, const EvalContext&) {
  Block2x2 b = instance_block(inst);
  PolarView p = polar_view(b.x());
  HermMatrix g = geometric_mean(b.a(), b.b());
  return {order_le("abs_x_le_mean_average", p.abs, 0.5 * (g + congruence(g, p.u.adjoint())))};
}

inline std::vector<Assertion> eval_fu_refinement(const Instance& inst, const EvalContext&) {
  Block2x2 b = instance_block(inst);
  PolarView p = polar_view(b.x());
  HermMatrix g = geometric_mean(b.a(), b.b());
  return {order_le("abs_x_le_mean_of_means", p.abs, geometric_mean(g, congruence(g, p.u.adjoint())))};
}

inline std::vector<Assertion> eval_amgm(const Instance& inst, const EvalContext&) {
  HermMatrix a = instance_herm(inst, "A");
  HermMatrix b = instance_herm(inst, "B");
  return {order_le("mean_le_average", geometric_mean(a, b), 0.5 * (a + b))};
}

inline std::vector<Assertion> eval_weighted_abs(const Instance& inst, const EvalContext& ctx) {
  Block2x2 b = instance_block(inst);
  PolarView p = polar_view(b.x());
  HermMatrix b_rot = congruence(b.b(), p.u.adjoint());  // U^* B U
  HermMatrix a_rot = congruence(b.a(), p.u);            // U A U^*
  std::vector<Assertion> out;
  for (double t : ctx.t_values) {
    out.push_back(order_le("abs_x", p.abs, geometric_mean(mean_t(b.a(), b_rot, t), mean_t(b.a(), b_rot, 1.0 - t)), t));
    out.push_back(order_le("abs_x_adjoint", p.abs_adjoint,
                           geometric_mean(mean_t(a_rot, b.b(), t), mean_t(a_rot, b.b(), 1.0 - t)), t));
  }
  return out;
}

inline std::vector<Assertion> eval_weighted_ppt(const Instance& inst, const EvalContext& ctx) {
  Block2x2 b = instance_block(inst);
  PolarView p = polar_view(b.x());
  std::vector<Assertion> out;
  for (double t : ctx.t_values) {
    HermMatrix gt = mean_t(b.a(), b.b(), t);
    HermMatrix gc = mean_t(b.a(), b.b(), 1.0 - t);
    out.push_back(order_le("abs_x", p.abs, geometric_mean(gt, congruence(gc, p.u.adjoint())), t));
    out.push_back(order_le("abs_x_adjoint", p.abs_adjoint, geometric_mean(congruence(gt, p.u), gc), t));
  }
  return out;
}

inline std::vector<Assertion> eval_eig_weighted_lee(const Instance& inst, const EvalContext& ctx) {
  Block2x2 b = instance_block(inst);
  PolarView p = polar_view(b.x());
  std::vector<Assertion> out;
  for (double t : ctx.t_values) {
    HermMatrix gt = mean_t(b.a(), b.b(), t);
    HermMatrix gc = mean_t(b.a(), b.b(), 1.0 - t);
    out.push_back(eigen_le("eig_abs_x", 2.0 * p.abs - gt, gc, t));
    out.push_back(eigen_le("eig_abs_x_adjoint", 2.0 * p.abs_adjoint - gt, gc, t));
  }
  HermMatrix g = geometric_mean(b.a(), b.b());
  out.push_back(eigen_le("eig_unweighted", 2.0 * p.abs - g, g, 0.5));
  return out;
}

inline std::vector<Assertion> eval_refined_norm(const Instance& inst, const EvalContext&) {
  Block2x2 b = instance_block(inst);
  PolarView p = polar_view(b.x());
  return {scalar_le("norm_le_rotated_sum", op_norm(b.assemble()), op_norm(b.a() + congruence(b.b(), p.u.adjoint())))};
}

inline std::vector<Assertion> eval_isometry_reconstruct(const Instance& inst, const EvalContext& ctx) {
  Block2x2 b = instance_block(inst);
  std::vector<Assertion> out;
  for (double t : ctx.t_values) {
    IsometryDecomposition d = isometry_decompose(b, MeanParams(t));
    ComplexMatrix target = d.compressed.assemble().mat();
    double residual = (isometry_reconstruct(d.compressed, d.isometries) - target).norm() / std::max(1.0, target.norm());
    out.push_back(within("reconstruction_residual", residual, 1e-9, t));
    double defect = std::max(isometry_defect(d.isometries.u_tilde), isometry_defect(d.isometries.v_tilde));
    out.push_back(within("isometry_defect", defect, 1e-10 * static_cast<double>(b.n()), t));
  }
  return out;
}

inline std::vector<Assertion> eval_mean_norm(const Instance& inst, const EvalContext& ctx) {
  Block2x2 b = instance_block(inst);
  std::vector<Assertion> out;
  for (double t : ctx.t_values) {
    Block2x2 c = mean_compress(b, MeanParams(t));
    out.push_back(scalar_le("compressed_norm", op_norm(c.assemble()), op_norm(c.a()) + op_norm(c.b()), t));
  }
  Block2x2 half = mean_compress(b, MeanParams(0.5));
  out.push_back(scalar_le("compressed_norm_midpoint", op_norm(half.assemble()), 2.0 * op_norm(half.a()), 0.5));
  return out;
}

inline std::vector<Assertion> eval_ando_chain(const Instance& inst, const EvalContext&) {
  Block2x2 b = instance_block(inst);
  Block2x2 half = mean_compress(b, MeanParams(0.5));
  double x_norm = op_norm(b.x());
  double half_norm = 0.5 * op_norm(half.assemble());
  return {scalar_le("x_le_half_compressed", x_norm, half_norm),
          scalar_le("half_compressed_le_mean", half_norm, op_norm(half.a())),
          scalar_le("twice_x_le_block", 2.0 * x_norm, op_norm(b.assemble()))};
}

inline std::vector<Assertion> eval_mixed_schwarz(const Instance& inst, const EvalContext&) {
  const ComplexMatrix& t = inst.matrix("T");
  const double a = inst.scalar("alpha");
  const double b = inst.scalar("beta");
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0 && a + b >= 1.0 - 1e-15)) {
    throw InvalidInput("mixed Schwarz exponents must satisfy alpha, beta in [0, 1], alpha + beta >= 1");
  }
  HermMatrix p = abs_matrix(t);
  HermMatrix q = abs_matrix(t.adjoint());
  ComplexMatrix lower = t * mat_pow(p, std::max(0.0, a + b - 1.0)).mat();
  HermMatrix p2a = mat_pow(p, 2.0 * a);
  Block2x2 block(p2a, lower, mat_pow(q, 2.0 * b));
  double half = 0.5 * op_norm(block.assemble());
  std::vector<Assertion> out{psd("block_psd", block.assemble()),
                             scalar_le("lower_le_half_block", op_norm(lower), half),
                             scalar_le("half_block_le_power_sum", half, op_norm(p2a + mat_pow(p, 2.0 * b)))};
  Block2x2 midpoint(q, t.adjoint(), p);  // [[|T^*|, T], [T^*, |T|]]
  out.push_back(equal("midpoint_equality", op_norm(t), 0.5 * op_norm(midpoint.assemble())));
  return out;
}

inline std::vector<Assertion> eval_abs_sum_norm(const Instance& inst, const EvalContext&) {
  Block2x2 b = instance_block(inst);
  return {scalar_le("norm_le_abs_sum", op_norm(b.assemble()),
                    op_norm(b.a() + b.b() + abs_matrix(b.x()) + abs_matrix(b.x().adjoint())))};
}

inline std::vector<Assertion> eval_semi_hypo_iff(const Instance& inst, const EvalContext& ctx) {
  SemiHypoEquivalence e = semi_hypo_block_iff(inst.matrix("T"), ctx.tol);
  return {agree("block_iff_order", e.block_psd, e.semi_hyponormal)};
}

inline std::vector<Assertion> eval_sum_abs_bound(const Instance& inst, const EvalContext&) {
  const ComplexMatrix& a = inst.matrix("A");
  const ComplexMatrix& b = inst.matrix("B");
  PolarParts s = polar(ComplexMatrix(a + b));
  HermMatrix sum = abs_matrix(a) + abs_matrix(b);
  return {order_le("abs_sum_le_mean", s.positive, geometric_mean(sum, congruence(sum, s.unitary.adjoint())))};
}

inline std::vector<Assertion> eval_sum_norm_bound(const Instance& inst, const EvalContext&) {
  const ComplexMatrix& a = inst.matrix("A");
  const ComplexMatrix& b = inst.matrix("B");
  return {scalar_le("sum_norm_le_abs_sum", op_norm(ComplexMatrix(a + b)), op_norm(abs_matrix(a) + abs_matrix(b)))};
}

inline std::vector<Assertion> eval_ab_equivalences(const Instance& inst, const EvalContext& ctx) {
  const ComplexMatrix& t = inst.matrix("T");
  const double alpha = inst.scalar("alpha");
  const double beta = inst.scalar("beta");
  struct Setting {
    const char* label;
    double alpha;
    double beta;
  };
  const Setting settings[] = {{"tight", alpha, beta},
                              {"relaxed", 0.9 * alpha, 1.1 * beta},
                              {"tightened", std::min(1.0, 1.1 * alpha), std::max(1.0, 0.9 * beta)}};
  std::vector<Assertion> out;
  for (const Setting& s : settings) {
    AbNormalCertificate order = is_ab_normal(t, s.alpha, s.beta, ctx.tol);
    std::vector<NamedBlock> blocks = ab_normal_blocks(t, s.alpha, s.beta, AbBlockVariant::Squared, ctx.tol);
    // blocks: [squared_alpha, squared_beta, squared2_alpha, squared2_beta]
    const std::string label = s.label;
    out.push_back(agree(label + "_alpha_order_vs_block", order.lower.holds, blocks[0].psd.holds));
    out.push_back(agree(label + "_alpha_order_vs_squared_block", order.lower.holds, blocks[2].psd.holds));
    out.push_back(agree(label + "_beta_order_vs_block", order.upper.holds, blocks[1].psd.holds));
    out.push_back(agree(label + "_beta_order_vs_squared_block", order.upper.holds, blocks[3].psd.holds));
  }
  return out;
}

inline std::vector<Assertion> eval_ab_linear_blocks(const Instance& inst, const EvalContext&) {
  const ComplexMatrix& t = inst.matrix("T");
  const double alpha = inst.scalar("alpha");
  const double beta = inst.scalar("beta");
  std::vector<Assertion> out;
  for (const NamedBlock& nb : ab_normal_blocks(t, alpha, beta, AbBlockVariant::Linear)) {
    out.push_back(psd(nb.name, nb.block.assemble()));
  }
  for (const NamedBlock& nb : ab_normal_blocks(t, alpha, beta, AbBlockVariant::Schwarz)) {
    out.push_back(psd(nb.name, nb.block.assemble()));
    out.push_back(psd(nb.name + "_transposed", nb.block.partial_transpose().assemble()));
  }
  return out;
}

inline std::vector<Assertion> eval_ab_eigen(const Instance& inst, const EvalContext&) {
  const ComplexMatrix& t = inst.matrix("T");
  const double alpha = inst.scalar("alpha");
  const double beta = inst.scalar("beta");
  AbsParts parts = abs_parts(t);
  const HermMatrix& p = parts.abs;
  const HermMatrix& q = parts.abs_adjoint;
  HermMatrix h_alpha = 2.0 * std::sqrt(alpha) * p - q;
  HermMatrix h_beta = (2.0 / std::sqrt(beta)) * q - p;
  double t_norm = op_norm(t);
  return {eigen_le("eig_alpha", h_alpha, q),
          eigen_le("eig_beta", h_beta, p),
          scalar_le("norm_alpha", op_norm(h_alpha), t_norm),
          scalar_le("norm_beta", op_norm(h_beta), t_norm),
          scalar_le("norm_abs_difference", op_norm(p - q), t_norm)};
}

inline std::vector<Assertion> eval_reverse_amgm(const Instance& inst, const EvalContext&) {
  const ComplexMatrix& t = inst.matrix("T");
  const double ia = 1.0 / std::sqrt(inst.scalar("alpha"));
  const double sb = std::sqrt(inst.scalar("beta"));
  AbsParts parts = abs_parts(t);
  const HermMatrix& p = parts.abs;
  const HermMatrix& q = parts.abs_adjoint;
  HermMatrix g = geometric_mean(p, q);
  return {order_le("average_le_scaled_mean", 0.5 * (p + q), std::min(ia, sb) * g),
          order_le("abs_le_alpha_mean", p, ia * g),
          order_le("abs_adjoint_le_beta_mean", q, sb * g),
          order_le("abs_adjoint_le_alpha_mean", q, ia * g),
          order_le("abs_le_beta_mean", p, sb * g)};
}

inline std::vector<Assertion> eval_positive_map(const Instance& inst, const EvalContext&) {
  const ComplexMatrix& t = inst.matrix("T");
  const double ia = 1.0 / std::sqrt(inst.scalar("alpha"));
  const double sb = std::sqrt(inst.scalar("beta"));
  PositiveMap map = instance_map(inst);
  AbsParts parts = abs_parts(t);
  PolarParts image = polar(positive_map_apply(map, t));
  HermMatrix phi_q(positive_map_apply(map, parts.abs_adjoint.mat()));
  HermMatrix phi_p(positive_map_apply(map, parts.abs.mat()));
  const ComplexMatrix u_adj = image.unitary.adjoint();
  const std::string kind = map_name(map);
  return {order_le(kind + "_alpha", image.positive, ia * geometric_mean(phi_q, congruence(phi_q, u_adj))),
          order_le(kind + "_beta", image.positive, sb * geometric_mean(phi_p, congruence(phi_p, u_adj)))};
}

inline std::vector<Assertion> eval_norm_square_reverse(const Instance& inst, const EvalContext&) {
  const ComplexMatrix& t = inst.matrix("T");
  const double factor = std::min(1.0 / inst.scalar("alpha"), inst.scalar("beta"));
  double norm = op_norm(t);
  return {scalar_le("norm_squared_le_scaled_square_norm", norm * norm, factor * op_norm(ComplexMatrix(t * t)))};
}

inline std::vector<Assertion> eval_gm_norm_halfpow(const Instance& inst, const EvalContext&) {
  HermMatrix a = instance_herm(inst, "A");
  HermMatrix b = instance_herm(inst, "B");
  return {scalar_le("mean_norm_le_root_product", op_norm(geometric_mean(a, b)),
                    op_norm(ComplexMatrix(mat_pow(a, 0.5).mat() * mat_pow(b, 0.5).mat())))};
}

// ---------------------------------------------------------------------------

inline const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = [] {
    using H = Hypothesis;
    return std::vector<CheckSpec>{
        {"C1", "norm_sum", H::PsdBlock, "block norm bounded by the sum of the diagonal norms", gen_psd_block, eval_norm_sum},
        {"C2", "hiroshima", H::HermitianPsdBlock, "block norm with Hermitian off-diagonal block", gen_hermitian_x_block, eval_hiroshima},
        {"C3", "lee_mean_bound", H::Ppt, "|X| below the averaged geometric mean", gen_ppt_block, eval_lee_mean_bound},
        {"C4", "fu_refinement", H::Ppt, "|X| below the mean of rotated means", gen_ppt_block, eval_fu_refinement},
        {"C5", "amgm", H::PdPair, "geometric mean below arithmetic mean", gen_pd_pair, eval_amgm},
        {"C6", "thm_weighted_abs", H::PsdBlock, "weighted-mean bounds on |X| and |X^*|", gen_psd_block, eval_weighted_abs},
        {"C7", "cor_weighted_ppt", H::Ppt, "weighted-mean bounds for PPT blocks", gen_ppt_block, eval_weighted_ppt},
        {"C8", "eig_weighted_lee", H::Ppt, "eigenvalue form of the weighted bounds", gen_ppt_block, eval_eig_weighted_lee},
        {"C9", "thm_refined_norm", H::PsdBlock, "block norm below ||A + U^* B U||", gen_psd_block, eval_refined_norm},
        {"C10", "isometry_reconstruct", H::Ppt, "isometry decomposition of the mean-compressed block", gen_ppt_block, eval_isometry_reconstruct},
        {"C11", "cor_mean_norm", H::Ppt, "norm of the mean-compressed block", gen_ppt_block, eval_mean_norm},
        {"C12", "ando_chain", H::Ppt, "off-diagonal norm chain", gen_ppt_block, eval_ando_chain},
        {"C13", "mixed_schwarz", H::GeneralT, "mixed Schwarz block and its norm bounds", gen_mixed_schwarz, eval_mixed_schwarz},
        {"C14", "abs_sum_norm", H::PsdBlock, "block norm below ||A + B + |X| + |X^*|||", gen_psd_block, eval_abs_sum_norm},
        {"C15", "semi_hypo_iff", H::GeneralT, "block characterization of semi-hyponormality", gen_semi_hypo_mix, eval_semi_hypo_iff},
        {"C16", "sum_abs_bound", H::SemiHyponormalPair, "|A + B| below a mean of |A| + |B|", gen_semi_hyponormal_pair, eval_sum_abs_bound},
        {"C17", "sum_norm_bound", H::SemiHyponormalPair, "||A + B|| below |||A| + |B|||", gen_semi_hyponormal_pair, eval_sum_norm_bound},
        {"C18", "ab_equivalences", H::AbNormal, "order and block characterizations agree", gen_ab_normal, eval_ab_equivalences},
        {"C19", "ab_linear_blocks", H::AbNormal, "linear and Schwarz blocks are PSD", gen_ab_normal, eval_ab_linear_blocks},
        {"C20", "ab_eigen", H::AbNormal, "eigenvalue and norm bounds for |T| and |T^*|", gen_ab_normal, eval_ab_eigen},
        {"C21", "reverse_amgm", H::AbNormal, "reverse arithmetic-geometric mean bound", gen_ab_normal, eval_reverse_amgm},
        {"C22", "positive_map", H::AbNormal, "mean bounds under positive linear maps", gen_ab_normal_with_map, eval_positive_map},
        {"C23", "norm_square_reverse", H::AbNormal, "reverse of ||T^2|| <= ||T||^2", gen_ab_normal, eval_norm_square_reverse},
        {"C24", "gm_norm_halfpow", H::PdPair, "||A # B|| below ||A^{1/2} B^{1/2}||", gen_pd_pair, eval_gm_norm_halfpow},
    };
  }();
  return specs;
}

inline const CheckSpec* find_check(const std::string& id) {
  for (const CheckSpec& s : registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

inline const CheckSpec& require_check(const std::string& id) {
  const CheckSpec* s = find_check(id);
  if (!s) throw UnknownCheck("unknown check id '" + id + "'");
  return *s;
}

}  // namespace pptm::verify

#endif  // PPTM_VERIFY_REGISTRY_HPP
