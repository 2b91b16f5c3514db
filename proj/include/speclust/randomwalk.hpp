#pragma once

#include "speclust/core.hpp"
#include "speclust/graph.hpp"
#include "speclust/spectrum.hpp"

#include <cstdint>

namespace speclust {

/// Random walk on a graph: P = D^-1 W and pi_i = d_i / vol(V).
struct WalkModel {
  Matrix transition;
  Vector stationary;
};

WalkModel build_walk(const SimilarityGraph& g);

/// P(X1 in Ā | X0 in A) + P(X1 in A | X0 in Ā) with X0 drawn from pi.
double ncut_via_walk(const SimilarityGraph& g, const VertexSet& a);

/// Pseudo-inverse of the unnormalized Laplacian of a connected graph.
struct CommuteKernel {
  Matrix pseudo_inverse;
  double volume = 0.0;
  Decomposition spectrum;  // of L, used for the embedding

  Index size() const { return pseudo_inverse.rows(); }
};

/// Eigenvalues below 1e-8 * lambda_max count as zero when inverting.
inline constexpr double kPseudoInverseTolerance = 1e-8;

/// Throws ErrorKind::Disconnected unless g has one component.
CommuteKernel commute_kernel(const SimilarityGraph& g);

/// c_ij = vol(V) (l+_ii - 2 l+_ij + l+_jj), 0-based indices.
double commute_distance(const CommuteKernel& kernel, Index i, Index j);

/// All pairwise commute distances.
Matrix commute_distances(const CommuteKernel& kernel);

/// Rows of U (Lambda^+)^1/2; vol(V) * ||z_i - z_j||^2 = c_ij.
Embedding commute_embedding(const CommuteKernel& kernel, const Decomposition& decomp);

/// Mean number of steps for the walk to go i -> j -> i over `trials`
/// seeded simulations.
double walk_simulate_commute(const SimilarityGraph& g, Index i, Index j, std::int64_t trials, std::uint64_t seed);

}  // namespace speclust
