#include "speclust/diagnostics.hpp"

#include "speclust/spectrum.hpp"

#include <limits>
#include <string>

namespace speclust {

Index choose_k_eigengap(const Vector& ascending, Index k_max) {
  const Index n = ascending.size();
  if (k_max < 2 || k_max > n - 1) {
    throw Error(ErrorKind::InvalidParameter, "k_max must lie in 2.." + std::to_string(n - 1) + ", got " +
                                                 std::to_string(k_max));
  }
  const double tol = 1e-12 * std::max(1.0, ascending.head(k_max + 1).cwiseAbs().maxCoeff());
  Index best_k = 1;
  double best_gap = -std::numeric_limits<double>::infinity();
  for (Index k = 1; k <= k_max; ++k) {
    const double gap = ascending(k) - ascending(k - 1);
    if (gap > best_gap + tol) {
      best_gap = gap;
      best_k = k;
    }
  }
  return best_k;
}

std::vector<Index> check_unnormalized_reliability(const Vector& ascending, const Vector& degrees, Index k,
                                                  double rho) {
  if (degrees.size() == 0) throw Error(ErrorKind::InvalidInput, "degree vector is empty");
  if (k < 0 || k > ascending.size()) {
    throw Error(ErrorKind::InvalidParameter, "k must lie in 0.." + std::to_string(ascending.size()));
  }
  const double threshold = rho * degrees.minCoeff();
  std::vector<Index> flagged;
  for (Index i = 0; i < k; ++i) {
    if (ascending(i) >= threshold) flagged.push_back(i + 1);
  }
  return flagged;
}

double suggest_epsilon_mst(const Matrix& distances) {
  const Index n = distances.rows();
  if (n < 2 || distances.cols() != n) throw Error(ErrorKind::InvalidInput, "MST heuristic needs at least two points");
  // Prim on the complete graph.
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  Vector best = Vector::Constant(n, std::numeric_limits<double>::infinity());
  best(0) = 0.0;
  double longest = 0.0;
  for (Index step = 0; step < n; ++step) {
    Index next = -1;
    for (Index v = 0; v < n; ++v) {
      if (!in_tree[static_cast<std::size_t>(v)] && (next < 0 || best(v) < best(next))) next = v;
    }
    in_tree[static_cast<std::size_t>(next)] = 1;
    longest = std::max(longest, best(next));
    for (Index v = 0; v < n; ++v) {
      if (!in_tree[static_cast<std::size_t>(v)]) best(v) = std::min(best(v), distances(next, v));
    }
  }
  double eps = std::nextafter(longest, std::numeric_limits<double>::infinity());
  if (!(eps > 0.0)) eps = std::numeric_limits<double>::denorm_min();
  return eps;
}

double suggest_sigma(const Matrix& distances) {
  const Index n = distances.rows();
  if (n < 2 || distances.cols() != n) throw Error(ErrorKind::InvalidInput, "sigma heuristic needs at least two points");
  const auto rank = std::min<Index>(static_cast<Index>(std::ceil(std::log(static_cast<double>(n)) + 1.0)), n - 1);
  double total = 0.0;
  std::vector<double> row;
  for (Index i = 0; i < n; ++i) {
    row.clear();
    for (Index j = 0; j < n; ++j) {
      if (j != i) row.push_back(distances(i, j));
    }
    std::nth_element(row.begin(), row.begin() + (rank - 1), row.end());
    total += row[static_cast<std::size_t>(rank - 1)];
  }
  return total / static_cast<double>(n);
}

Index suggest_knn_k(Index n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "knn heuristic needs at least two points");
  const auto k = static_cast<Index>(std::ceil(std::log(static_cast<double>(n))));
  return std::clamp<Index>(k, 1, n - 1);
}

DiagnosticsReport diagnose(const SimilarityGraph& g, LaplacianKind kind, Index k_max, double rho) {
  const Decomposition decomp = laplacian_spectrum(build_laplacian(g, kind));
  DiagnosticsReport r;
  r.suggested_k = choose_k_eigengap(decomp.eigenvalues, k_max);
  for (Index i = 0; i <= k_max; ++i) r.eigenvalues.push_back(decomp.eigenvalues(i));
  for (Index k = 1; k <= k_max; ++k) r.eigengaps.push_back(eigengap(decomp.eigenvalues, k));
  r.min_degree = g.degrees().minCoeff();
  if (kind == LaplacianKind::Unnormalized) {
    r.unreliable_eigenvalue_indices = check_unnormalized_reliability(decomp.eigenvalues, g.degrees(), k_max + 1, rho);
  }
  return r;
}

}  // namespace speclust
