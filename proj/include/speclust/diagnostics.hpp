#pragma once

#include "speclust/core.hpp"
#include "speclust/graph.hpp"
#include "speclust/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace speclust {

/// argmax over k in 1..k_max of lambda_{k+1} - lambda_k; near-equal gaps
/// (within 1e-12 of the spectrum's scale) resolve to the smallest k.
Index choose_k_eigengap(const Vector& ascending, Index k_max);

inline constexpr double kReliabilityRatio = 0.9;

/// 1-based indices i <= k whose eigenvalue reaches rho * min_j d_j.
std::vector<Index> check_unnormalized_reliability(const Vector& ascending, const Vector& degrees, Index k,
                                                  double rho = kReliabilityRatio);

/// Frobenius norm of sin Theta between the column spans of two n x p
/// column-orthonormal matrices, sqrt(sum_i (1 - sigma_i^2)) with sigma_i the
/// singular values of V1'V2. Evaluated as ||V2 - V1 V1' V2||_F, which equals
/// the same quantity without cancellation for nearly aligned spans.
template <typename D1, typename D2>
typename D1::Scalar subspace_distance(const Eigen::MatrixBase<D1>& v1, const Eigen::MatrixBase<D2>& v2) {
  using Scalar = typename D1::Scalar;
  if (v1.rows() != v2.rows() || v1.cols() != v2.cols()) {
    throw Error(ErrorKind::Dimension, "subspace bases must have equal shape");
  }
  const Index p = v1.cols();
  const MatrixX<Scalar> eye = MatrixX<Scalar>::Identity(p, p);
  if ((v1.transpose() * v1 - eye).cwiseAbs().maxCoeff() > Scalar(1e-8) ||
      (v2.transpose() * v2 - eye).cwiseAbs().maxCoeff() > Scalar(1e-8)) {
    throw Error(ErrorKind::InvalidInput, "subspace bases must be column-orthonormal");
  }
  const MatrixX<Scalar> residual = v2 - v1 * (v1.transpose() * v2);
  return std::clamp(residual.norm(), Scalar(0), std::sqrt(static_cast<Scalar>(p)));
}

/// Longest minimum-spanning-tree edge, nudged up one ulp so the strict
/// d_ij < eps graph is connected.
double suggest_epsilon_mst(const Matrix& distances);

/// Mean distance to the ceil(ln n + 1)-th nearest neighbor (capped at n-1).
double suggest_sigma(const Matrix& distances);

/// ceil(ln n) clamped to [1, n-1].
Index suggest_knn_k(Index n);

struct DiagnosticsReport {
  Index suggested_k = 1;
  std::vector<double> eigenvalues;
  std::vector<double> eigengaps;                   // gap k at position k-1
  std::vector<Index> unreliable_eigenvalue_indices;  // unnormalized only
  double min_degree = 0.0;
};

/// Eigengap choice over 1..k_max on the chosen Laplacian; the reliability
/// check runs for the unnormalized kind over the first k_max + 1 eigenvalues.
DiagnosticsReport diagnose(const SimilarityGraph& g, LaplacianKind kind, Index k_max,
                           double rho = kReliabilityRatio);

}  // namespace speclust
