#include "speclust/spectral.hpp"

#include "speclust/spectrum.hpp"

#include <string>

namespace speclust {

namespace {

void check_k(const SimilarityGraph& g, Index k) {
  if (g.size() == 0) throw Error(ErrorKind::InvalidInput, "graph has no vertices");
  if (k < 1 || k > g.size()) {
    throw Error(ErrorKind::InvalidParameter, "cluster count must lie in 1.." + std::to_string(g.size()) +
                                                 ", got " + std::to_string(k));
  }
}

void normalize_rows(Embedding& u) {
  for (Index i = 0; i < u.rows(); ++i) {
    const double norm = u.row(i).norm();
    if (norm < 1e-12) {
      throw Error(ErrorKind::ZeroRow,
                  "row " + std::to_string(i + 1) + " of the eigenvector matrix is zero; cannot normalize");
    }
    u.row(i) /= norm;
  }
}

Partition cluster_with(const SimilarityGraph& g, const SpectralConfig& cfg, LaplacianKind kind) {
  check_k(g, cfg.k);
  return cluster_embedding(embed(g, kind, cfg.k), cfg);
}

void require_kind(const SpectralConfig& cfg, LaplacianKind expected) {
  if (cfg.laplacian != expected) {
    throw Error(ErrorKind::InvalidParameter, "configuration names the " + std::string(to_string(cfg.laplacian)) +
                                                 " Laplacian, this algorithm uses " +
                                                 std::string(to_string(expected)));
  }
}

}  // namespace

Embedding embedding_from_spectrum(const SpectralDecomposition<double>& spectrum, LaplacianKind kind, Index k) {
  Embedding u = first_k(spectrum, k);
  if (kind == LaplacianKind::SymNormalized) normalize_rows(u);
  return u;
}

Partition cluster_embedding(const Embedding& rows, const SpectralConfig& cfg) {
  return kmeans(rows, {cfg.k, cfg.seed, cfg.restarts, cfg.max_iters}).partition;
}

Embedding embed(const SimilarityGraph& g, LaplacianKind kind, Index k) {
  check_k(g, k);
  switch (kind) {
    case LaplacianKind::Unnormalized:
      return first_k(eig_symmetric(build_laplacian(g, kind).dense()), k);
    case LaplacianKind::RandomWalk: {
      const LaplacianMatrix lap = build_laplacian(g, LaplacianKind::Unnormalized);
      return generalized_eig(lap, g.degrees(), k).eigenvectors;
    }
    case LaplacianKind::SymNormalized:
      return embedding_from_spectrum(eig_symmetric(build_laplacian(g, kind).dense()), kind, k);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown Laplacian kind");
}

Partition cluster_unnormalized(const SimilarityGraph& g, const SpectralConfig& cfg) {
  require_kind(cfg, LaplacianKind::Unnormalized);
  return cluster_with(g, cfg, LaplacianKind::Unnormalized);
}

Partition cluster_shi_malik(const SimilarityGraph& g, const SpectralConfig& cfg) {
  require_kind(cfg, LaplacianKind::RandomWalk);
  return cluster_with(g, cfg, LaplacianKind::RandomWalk);
}

Partition cluster_ng_jordan_weiss(const SimilarityGraph& g, const SpectralConfig& cfg) {
  require_kind(cfg, LaplacianKind::SymNormalized);
  return cluster_with(g, cfg, LaplacianKind::SymNormalized);
}

Partition spectral_cluster(const SimilarityGraph& g, const SpectralConfig& cfg) {
  return cluster_with(g, cfg, cfg.laplacian);
}

}  // namespace speclust
