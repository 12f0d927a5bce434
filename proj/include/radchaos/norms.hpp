#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "radchaos/types.hpp"

namespace radchaos {

/// Exact maximum plus the configuration attaining it. Witness masks use the
/// convention: bit j set <=> index j is in the subset (subset witnesses), or
/// component j equals +1 (sign-vector witnesses). Ties between maximizers are
/// broken toward the smallest enumerated mask. The value is re-evaluated at
/// the witness with a fresh pass, so evaluating the objective at the witness
/// reproduces it.
struct NormResult {
  double value = 0.0;
  std::vector<std::pair<std::string, std::uint64_t>> witness;

  std::uint64_t mask(const std::string& name) const;
};

/// ||A: linf^m -> l1^n|| = max over x in {+-1}^m of sum_i |sum_j a_ij x_j|.
/// Order-2 tensors only. Witness: "x" (column signs) and "rows" (induced
/// row signs).
NormResult opnorm_inf_to_1(const CoeffTensor& a, const ExecOptions& opts = {});

/// Cut-norm: max over one index subset per axis of |sum of selected cells|.
/// Empty subsets are admitted. Order >= 2. The last axis is resolved in
/// closed form (positive/negative part selection), so enumeration covers
/// axes 1..d-1. Witness: "I1".."Id".
NormResult cut_norm(const CoeffTensor& a, const ExecOptions& opts = {});

/// Modified cut-norm: max over a single subset I of |sum of coefficients
/// whose increasing key lies inside I|. Witness: "I".
NormResult cut_norm_star(const SimplexCoeffs& a, const ExecOptions& opts = {});

/// Linf norm of the multiple Rademacher sum: max over d sign vectors of the
/// multilinear form. The last vector is resolved analytically; order 1
/// degenerates to the l1 norm. Witness: "x1".."xd".
NormResult linf_multiple(const CoeffTensor& a, const ExecOptions& opts = {});

/// Linf norm of the Rademacher chaos sum: max over a single sign vector eps
/// of |sum a_key prod_{j in key} eps_j|. Witness: "eps".
NormResult linf_chaos(const SimplexCoeffs& a, const ExecOptions& opts = {});

/// Exact Lp norm of sum a_j r_j: (2^-k sum over sign vectors |.|^p)^(1/p).
/// Requires k <= 24.
double lp_rademacher_exact(const std::vector<double>& a, double p,
                           const ExecOptions& opts = {});

/// Symmetrized decoupling tensor: order-d, extent n per axis, cell
/// (j_1..j_d) = a_sorted / d! when the indices are pairwise distinct, else 0.
CoeffTensor decouple(const SimplexCoeffs& a);

/// M_k = sum_l sqrt(sum of squares over the slice {j : j_k = l}).
MixedNormProfile mixed_norm_profile(const CoeffTensor& a);
/// Same over the triangular slices of a SimplexCoeffs.
MixedNormProfile mixed_norm_profile(const SimplexCoeffs& a);

// Witness evaluators: exact objective at a given configuration. Used to
// re-verify results independently of the enumeration path.

/// Sum of cells selected by one subset mask per axis.
double subset_sum(const CoeffTensor& a, const std::vector<std::uint64_t>& subsets);
/// Multilinear form at one sign mask per axis (bit set <=> +1).
double signed_sum(const CoeffTensor& a, const std::vector<std::uint64_t>& signs);
/// sum_{key inside I} a_key.
double restricted_sum(const SimplexCoeffs& a, std::uint64_t subset);
/// sum a_key prod eps over the key (bit set <=> +1); eps bits are 1-based
/// shifted down (bit j <=> ground element j+1).
double chaos_signed_sum(const SimplexCoeffs& a, std::uint64_t signs);

/// Cell-wise sign flip; the pattern aligns with values() row-major order.
CoeffTensor apply_signs(const CoeffTensor& a, const SignPattern& p);
/// Key-wise sign flip; the pattern aligns with the key map order.
SimplexCoeffs apply_signs(const SimplexCoeffs& a, const SignPattern& p);

}  // namespace radchaos
