#pragma once

#include "speclust/core.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace speclust {

/// Pairwise Euclidean distances between the rows of `points`. Each pair is
/// computed once and mirrored, so the result is exactly symmetric.
template <typename Derived>
MatrixX<typename Derived::Scalar> euclidean_distances(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Index n = points.rows();
  MatrixX<Scalar> d = MatrixX<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Scalar dist = (points.row(i) - points.row(j)).norm();
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  return d;
}

/// s_ij = exp(-d_ij^2 / (2 sigma^2)) applied entrywise to a distance matrix.
template <typename Derived>
MatrixX<typename Derived::Scalar> gaussian_kernel(const Eigen::MatrixBase<Derived>& distances,
                                                  typename Derived::Scalar sigma) {
  using Scalar = typename Derived::Scalar;
  if (!(sigma > Scalar(0)) || !std::isfinite(static_cast<double>(sigma))) {
    throw Error(ErrorKind::InvalidParameter, "sigma must be finite and positive");
  }
  const Scalar scale = Scalar(1) / (Scalar(2) * sigma * sigma);
  return distances.unaryExpr([scale](Scalar d) { return std::exp(-d * d * scale); }).eval();
}

template <typename Derived>
MatrixX<typename Derived::Scalar> gaussian_similarity(const Eigen::MatrixBase<Derived>& points,
                                                      typename Derived::Scalar sigma) {
  if (!(sigma > 0)) throw Error(ErrorKind::InvalidParameter, "sigma must be finite and positive");
  return gaussian_kernel(euclidean_distances(points), sigma);
}

inline Matrix euclidean_distances(const PointSet& points) { return euclidean_distances(points.points()); }
inline Matrix gaussian_similarity(const PointSet& points, double sigma) {
  return gaussian_similarity(points.points(), sigma);
}

/// Maps a distance matrix and a bandwidth to a similarity matrix.
using SimilarityKernel = std::function<Matrix(const Matrix& distances, double bandwidth)>;

/// Named kernels; "gaussian" is registered by default.
class KernelRegistry {
 public:
  static KernelRegistry& instance();

  void add(std::string name, SimilarityKernel kernel) { kernels_[std::move(name)] = std::move(kernel); }
  bool contains(std::string_view name) const { return kernels_.find(name) != kernels_.end(); }
  const SimilarityKernel& get(std::string_view name) const;

 private:
  KernelRegistry();
  std::map<std::string, SimilarityKernel, std::less<>> kernels_;
};

inline KernelRegistry::KernelRegistry() {
  add("gaussian", [](const Matrix& d, double sigma) { return gaussian_kernel(d, sigma); });
}

inline KernelRegistry& KernelRegistry::instance() {
  static KernelRegistry registry;
  return registry;
}

inline const SimilarityKernel& KernelRegistry::get(std::string_view name) const {
  auto it = kernels_.find(name);
  if (it == kernels_.end()) throw Error(ErrorKind::InvalidParameter, "unknown similarity kernel: " + std::string(name));
  return it->second;
}

}  // namespace speclust
