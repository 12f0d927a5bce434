#pragma once

#include <cstdint>
#include <optional>

#include "radchaos/types.hpp"

namespace radchaos {

/// Outcome of a discrepancy computation. For exact modes, re-evaluating the
/// restricted signed weight sum at (coloring, witness_subset) reproduces
/// value. Monte-Carlo results carry the sample mean as value, the standard
/// error, the trial count, and the best (smallest) per-coloring discrepancy
/// seen together with its coloring and subset.
struct DiscResult {
  double value = 0.0;
  std::optional<Coloring> coloring;
  std::optional<std::uint64_t> witness_subset;
  std::optional<double> stderr_value;
  std::optional<std::uint64_t> trials;
  std::optional<double> best_value;
};

/// max over vertex subsets V' of |sum of theta(e) w(e) over edges inside V'|.
DiscResult disc_for_coloring(const WeightedHypergraph& h, const Coloring& theta,
                             const ExecOptions& opts = {});

/// min over colorings of disc_for_coloring. The first edge's sign is fixed
/// to +1 (discrepancy is invariant under a global sign flip).
DiscResult disc_exact(const WeightedHypergraph& h, const ExecOptions& opts = {});

/// Mean of disc_for_coloring over all 2^|E| colorings.
DiscResult expected_disc_exact(const WeightedHypergraph& h, const ExecOptions& opts = {});

/// Monte-Carlo estimate of the expectation over uniform colorings. Trial t
/// draws its coloring from a counter-derived stream of (seed, t), so results
/// are reproducible for any trial schedule.
DiscResult disc_monte_carlo(const WeightedHypergraph& h, std::uint64_t trials,
                            std::uint64_t seed, const ExecOptions& opts = {});

/// Balance functional: sum over vertices of the l2 norm of incident weights.
double balance(const WeightedHypergraph& h);

/// Two-block variant max{sum over [0, left_count), sum over the rest} for
/// graphs built with build_bipartite.
double balance_two_block(const WeightedHypergraph& h, int left_count);

/// Signed weight of edges inside the subset, for witness re-verification.
double coloring_restricted_sum(const WeightedHypergraph& h, const Coloring& theta,
                               std::uint64_t subset);

}  // namespace radchaos
