#include "speclust/kmeans.hpp"

#include <limits>
#include <random>
#include <string>

namespace speclust {

namespace {

struct Run {
  std::vector<int> assignment;  // 0-based cluster per row
  Matrix centers;
  double distortion = 0.0;
  int iterations = 0;
  std::vector<double> history;
};

Matrix seed_centers(const Eigen::Ref<const Matrix>& rows, Index k, std::mt19937_64& rng) {
  const Index n = rows.rows();
  Matrix centers(k, rows.cols());
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::uniform_int_distribution<Index> first(0, n - 1);
  Index pick = first(rng);
  centers.row(0) = rows.row(pick);
  used[static_cast<std::size_t>(pick)] = 1;

  Vector nearest = (rows.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (Index c = 1; c < k; ++c) {
    const double total = nearest.sum();
    if (total > 0.0) {
      std::uniform_real_distribution<double> u(0.0, total);
      const double target = u(rng);
      double acc = 0.0;
      pick = -1;
      for (Index i = 0; i < n; ++i) {
        if (nearest(i) <= 0.0) continue;
        acc += nearest(i);
        pick = i;
        if (acc > target) break;
      }
    } else {
      // Every row coincides with a chosen center.
      pick = 0;
      while (pick < n - 1 && used[static_cast<std::size_t>(pick)]) ++pick;
    }
    centers.row(c) = rows.row(pick);
    used[static_cast<std::size_t>(pick)] = 1;
    nearest = nearest.cwiseMin((rows.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

bool assign(const Eigen::Ref<const Matrix>& rows, const Matrix& centers, std::vector<int>& assignment) {
  bool changed = false;
  for (Index i = 0; i < rows.rows(); ++i) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (Index c = 0; c < centers.rows(); ++c) {
      const double d = (rows.row(i) - centers.row(c)).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(c);
      }
    }
    if (assignment[static_cast<std::size_t>(i)] != best) {
      assignment[static_cast<std::size_t>(i)] = best;
      changed = true;
    }
  }
  return changed;
}

// Gives each empty cluster the point farthest from its current center,
// taken from a cluster that keeps at least one member.
bool repair_empty(const Eigen::Ref<const Matrix>& rows, Matrix& centers, std::vector<int>& assignment) {
  const Index k = centers.rows();
  std::vector<Index> sizes(static_cast<std::size_t>(k), 0);
  for (int a : assignment) ++sizes[static_cast<std::size_t>(a)];
  bool changed = false;
  for (Index c = 0; c < k; ++c) {
    if (sizes[static_cast<std::size_t>(c)] > 0) continue;
    Index far = -1;
    double far_d = -1.0;
    for (Index i = 0; i < rows.rows(); ++i) {
      const int owner = assignment[static_cast<std::size_t>(i)];
      if (sizes[static_cast<std::size_t>(owner)] < 2) continue;
      const double d = (rows.row(i) - centers.row(owner)).squaredNorm();
      if (d > far_d) {
        far_d = d;
        far = i;
      }
    }
    --sizes[static_cast<std::size_t>(assignment[static_cast<std::size_t>(far)])];
    assignment[static_cast<std::size_t>(far)] = static_cast<int>(c);
    sizes[static_cast<std::size_t>(c)] = 1;
    centers.row(c) = rows.row(far);
    changed = true;
  }
  return changed;
}

void update_centers(const Eigen::Ref<const Matrix>& rows, const std::vector<int>& assignment, Matrix& centers) {
  Matrix sums = Matrix::Zero(centers.rows(), centers.cols());
  Vector counts = Vector::Zero(centers.rows());
  for (Index i = 0; i < rows.rows(); ++i) {
    const int c = assignment[static_cast<std::size_t>(i)];
    sums.row(c) += rows.row(i);
    counts(c) += 1.0;
  }
  for (Index c = 0; c < centers.rows(); ++c) {
    if (counts(c) > 0.0) centers.row(c) = sums.row(c) / counts(c);
  }
}

double total_distortion(const Eigen::Ref<const Matrix>& rows, const std::vector<int>& assignment,
                        const Matrix& centers) {
  double total = 0.0;
  for (Index i = 0; i < rows.rows(); ++i) {
    total += (rows.row(i) - centers.row(assignment[static_cast<std::size_t>(i)])).squaredNorm();
  }
  return total;
}

Run single_run(const Eigen::Ref<const Matrix>& rows, Index k, int max_iters, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Run run;
  run.centers = seed_centers(rows, k, rng);
  run.assignment.assign(static_cast<std::size_t>(rows.rows()), -1);
  assign(rows, run.centers, run.assignment);
  repair_empty(rows, run.centers, run.assignment);
  run.history.push_back(total_distortion(rows, run.assignment, run.centers));

  for (int it = 0; it < max_iters; ++it) {
    update_centers(rows, run.assignment, run.centers);
    bool changed = assign(rows, run.centers, run.assignment);
    changed = repair_empty(rows, run.centers, run.assignment) || changed;
    ++run.iterations;
    run.history.push_back(total_distortion(rows, run.assignment, run.centers));
    if (!changed) break;
  }
  run.distortion = run.history.back();
  return run;
}

}  // namespace

KMeansResult kmeans(const Eigen::Ref<const Matrix>& rows, const KMeansOptions& options) {
  const Index n = rows.rows();
  if (n == 0 || rows.cols() == 0) throw Error(ErrorKind::InvalidInput, "k-means input is empty");
  if (!rows.allFinite()) throw Error(ErrorKind::InvalidInput, "k-means input has non-finite entries");
  if (options.k < 1 || options.k > n) {
    throw Error(ErrorKind::InvalidParameter, "k-means k must lie in 1.." + std::to_string(n) + ", got " +
                                                 std::to_string(options.k));
  }
  if (options.restarts < 1) throw Error(ErrorKind::InvalidParameter, "k-means needs at least one restart");
  if (options.max_iters < 1) throw Error(ErrorKind::InvalidParameter, "k-means needs at least one iteration");

  Run best;
  bool have = false;
  for (int r = 0; r < options.restarts; ++r) {
    Run run = single_run(rows, options.k, options.max_iters, options.seed + static_cast<std::uint64_t>(r));
    if (!have || run.distortion < best.distortion) {
      best = std::move(run);
      have = true;
    }
  }

  std::vector<int> labels(best.assignment.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = best.assignment[i] + 1;
  const Partition raw = Partition::from_labels(std::move(labels), static_cast<int>(options.k));
  const Partition canon = raw.canonical();

  KMeansResult result;
  result.centers.resize(options.k, rows.cols());
  for (std::size_t i = 0; i < raw.size(); ++i) result.centers.row(canon[i] - 1) = best.centers.row(raw[i] - 1);
  result.partition = canon;
  result.distortion = best.distortion;
  result.iterations = best.iterations;
  result.history = std::move(best.history);
  return result;
}

double distortion(const Eigen::Ref<const Matrix>& rows, const Partition& p, const Matrix& centers) {
  if (static_cast<Index>(p.size()) != rows.rows() || centers.rows() != p.k() || centers.cols() != rows.cols()) {
    throw Error(ErrorKind::Dimension, "rows, partition and centers disagree in size");
  }
  double total = 0.0;
  for (Index i = 0; i < rows.rows(); ++i) {
    total += (rows.row(i) - centers.row(p[static_cast<std::size_t>(i)] - 1)).squaredNorm();
  }
  return total;
}

}  // namespace speclust
