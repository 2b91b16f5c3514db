#pragma once

#include "speclust/core.hpp"
#include "speclust/graph.hpp"
#include "speclust/spectral.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace speclust {

/// Objective values of a partition A_1..A_k, with W_i = W(A_i, complement):
///   cut       = 1/2 sum_i W_i
///   ratiocut  = sum_i W_i / |A_i|
///   ncut      = sum_i W_i / vol(A_i)
///   minmaxcut = sum_i W_i / W(A_i, A_i)
struct CutReport {
  double cut = 0.0;
  double ratiocut = 0.0;
  double ncut = 0.0;
  /// Absent when some cluster has no internal weight.
  std::optional<double> minmaxcut;

  std::vector<double> boundary;          // W_i
  std::vector<double> ratiocut_terms;    // W_i / |A_i|
  std::vector<double> ncut_terms;        // W_i / vol(A_i)
  std::vector<double> minmaxcut_terms;   // W_i / W(A_i, A_i), +inf when undefined
};

/// Throws UndefinedObjective when a cluster has zero volume.
CutReport evaluate_cuts(const SimilarityGraph& g, const Partition& p);

enum class CutObjective { Cut, RatioCut, NCut };

std::string_view to_string(CutObjective objective);
CutObjective parse_cut_objective(std::string_view name);

/// Two-cluster partition: label 1 for members of `a`, 2 otherwise.
Partition bipartition(const VertexSet& a);

/// Objective of the bipartition (A, complement of A).
double bipartition_objective(const SimilarityGraph& g, const VertexSet& a, CutObjective objective);

struct ExactBipartition {
  VertexSet side;  // always contains vertex 0
  double value;
};

inline constexpr Index kMaxExactVertices = 20;

/// Global minimizer over all bipartitions with both sides nonempty, by
/// Gray-code enumeration of 2^(n-1) subsets. Ncut skips bipartitions with a
/// zero-volume side. Ties go to the lexicographically smallest side holding
/// vertex 0.
ExactBipartition exact_min_bipartition(const SimilarityGraph& g, CutObjective objective);

struct RelaxationVectors {
  Vector f;  // bipartition indicator (cardinality or volume version)
  Matrix h;  // n x 2 scaled indicator columns
};

/// normalized = false: f_i = sqrt(|Ā|/|A|) on A, -sqrt(|A|/|Ā|) on Ā and
/// H columns 1/sqrt(|A_j|) on A_j. normalized = true uses volumes instead.
RelaxationVectors build_relaxation_vector(const SimilarityGraph& g, const VertexSet& a, bool normalized);

/// n x k matrix with h_ij = 1/sqrt(|A_j|) (or 1/sqrt(vol(A_j))) on cluster j.
Matrix indicator_matrix(const SimilarityGraph& g, const Partition& p, bool normalized);

struct GapReport {
  CutObjective objective;
  double spectral_value;
  double exact_value;
  double ratio;
};

/// Runs two-way spectral clustering with cfg.laplacian (Unnormalized is
/// compared on RatioCut, the normalized kinds on Ncut) against the exact
/// optimum. A 0/0 ratio is reported as 1.
GapReport relaxation_gap_report(const SimilarityGraph& g, const SpectralConfig& cfg);

}  // namespace speclust
