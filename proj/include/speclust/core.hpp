#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace speclust {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<double>;
using Vector = VectorX<double>;
using Index = Eigen::Index;

// n x k spectral representation; row i is the point y_i.
using Embedding = Matrix;

enum class ErrorKind {
  InvalidParameter,
  InvalidInput,
  Parse,
  Dimension,
  IsolatedVertex,
  Disconnected,
  UndefinedObjective,
  InvalidPartition,
  InstanceSize,
  ZeroRow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// n points in R^d, one per row.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(Matrix points);

  const Matrix& points() const noexcept { return points_; }
  Index size() const noexcept { return points_.rows(); }
  Index dim() const noexcept { return points_.cols(); }
  auto row(Index i) const { return points_.row(i); }

 private:
  Matrix points_;
};

/// Assignment of n vertices to k nonempty clusters. Labels are 1-based.
class Partition {
 public:
  Partition() = default;

  /// Validates that every label lies in 1..k and every cluster is nonempty.
  /// With k = 0 the cluster count is taken as the largest label.
  static Partition from_labels(std::vector<int> labels, int k = 0);

  const std::vector<int>& labels() const noexcept { return labels_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }

  /// 0-based vertex indices of cluster `label` (1-based), ascending.
  std::vector<Index> members(int label) const;
  std::vector<std::size_t> cluster_sizes() const;

  /// Renumbers clusters by order of first appearance.
  Partition canonical() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> labels_;
  int k_ = 0;
};

/// True when both partitions group the vertices identically.
bool same_grouping(const Partition& a, const Partition& b);

}  // namespace speclust
