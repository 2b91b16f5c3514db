#pragma once

#include "speclust/core.hpp"
#include "speclust/eigensolver.hpp"
#include "speclust/graph.hpp"
#include "speclust/kmeans.hpp"
#include "speclust/laplacian.hpp"

#include <cstdint>

namespace speclust {

struct SpectralConfig {
  LaplacianKind laplacian = LaplacianKind::RandomWalk;
  Index k = 2;
  std::uint64_t seed = 0;
  int restarts = 10;
  int max_iters = 300;
};

/// The n x k spectral representation fed to k-means:
///  - Unnormalized: first k eigenvectors of L
///  - RandomWalk: first k generalized eigenvectors of L u = lambda D u
///  - SymNormalized: first k eigenvectors of L_sym with rows scaled to unit norm
/// Rows of norm below 1e-12 under SymNormalized raise ErrorKind::ZeroRow.
Embedding embed(const SimilarityGraph& g, LaplacianKind kind, Index k);

/// The same embedding taken from a precomputed spectrum of the `kind`
/// Laplacian (as returned by laplacian_spectrum).
Embedding embedding_from_spectrum(const SpectralDecomposition<double>& spectrum, LaplacianKind kind, Index k);

/// k-means step on embedding rows.
Partition cluster_embedding(const Embedding& rows, const SpectralConfig& cfg);

/// Unnormalized spectral clustering (eigenvectors of L).
Partition cluster_unnormalized(const SimilarityGraph& g, const SpectralConfig& cfg);
/// Normalized spectral clustering with the generalized eigenvectors (L_rw).
Partition cluster_shi_malik(const SimilarityGraph& g, const SpectralConfig& cfg);
/// Normalized spectral clustering on row-normalized L_sym eigenvectors.
Partition cluster_ng_jordan_weiss(const SimilarityGraph& g, const SpectralConfig& cfg);

/// Dispatches on cfg.laplacian.
Partition spectral_cluster(const SimilarityGraph& g, const SpectralConfig& cfg);

}  // namespace speclust
