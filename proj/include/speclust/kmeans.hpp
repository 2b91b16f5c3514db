#pragma once

#include "speclust/core.hpp"

#include <cstdint>
#include <vector>

namespace speclust {

struct KMeansOptions {
  Index k = 2;
  std::uint64_t seed = 0;
  int restarts = 10;
  int max_iters = 300;
};

struct KMeansResult {
  Partition partition;
  Matrix centers;  // k x dim, row c-1 is the center of cluster c
  double distortion = 0.0;
  int iterations = 0;
  /// Distortion after seeding and after every assignment/update round of
  /// the winning restart.
  std::vector<double> history;
};

/// Lloyd iterations from distance-squared seeding, best of `restarts`
/// (restart r uses seed + r). Labels are renumbered by first appearance.
KMeansResult kmeans(const Eigen::Ref<const Matrix>& rows, const KMeansOptions& options);

/// Sum of squared distances from rows to their assigned centers.
double distortion(const Eigen::Ref<const Matrix>& rows, const Partition& p, const Matrix& centers);

}  // namespace speclust
