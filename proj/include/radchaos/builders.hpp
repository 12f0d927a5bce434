#pragma once

#include <functional>

#include "radchaos/types.hpp"

namespace radchaos {

/// Sign of the i-th Rademacher function at t: (-1)^floor(2^i t).
/// Exact for every representable t in [0, 1); i >= 1.
int rademacher_eval(int i, double t);

/// Complete d-homogeneous hypergraph on n vertices, one edge per d-subset
/// (lexicographic order), all carrying `weight`.
WeightedHypergraph build_complete(int n, int d, double weight);

/// Same, with a per-edge weight generator called in lexicographic edge order.
WeightedHypergraph build_complete(int n, int d,
                                  const std::function<double(const std::vector<int>&)>& weight_fn);

/// Complete bipartite graph from an n x m weight matrix: left block
/// [0, n), right block [n, n+m), edge {i, n+j} with weight a(i, j).
WeightedHypergraph build_bipartite(const CoeffTensor& weights);

/// Chaos coefficients of a hypergraph: value w(e) at each edge's (1-based)
/// vertex tuple. Keys are 1-based here and only here; the hypergraph side
/// stays 0-based.
SimplexCoeffs chaos_coeffs(const WeightedHypergraph& h);

}  // namespace radchaos
