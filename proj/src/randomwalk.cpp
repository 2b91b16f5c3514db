#include "speclust/randomwalk.hpp"

#include "speclust/laplacian.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace speclust {

namespace {

void require_connected(const SimilarityGraph& g) {
  if (g.size() == 0) throw Error(ErrorKind::InvalidInput, "graph has no vertices");
  const int components = connected_components(g).k();
  if (components != 1) {
    throw Error(ErrorKind::Disconnected,
                "graph has " + std::to_string(components) + " connected components; commute distance needs 1");
  }
}

void check_vertex(Index n, Index i) {
  if (i < 0 || i >= n) {
    throw Error(ErrorKind::InvalidParameter,
                "vertex " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
  }
}

Vector inverted_spectrum(const Vector& eigenvalues) {
  const double cutoff = kPseudoInverseTolerance * std::max(eigenvalues.maxCoeff(), 0.0);
  Vector inv = Vector::Zero(eigenvalues.size());
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) > cutoff && eigenvalues(i) > 0.0) inv(i) = 1.0 / eigenvalues(i);
  }
  return inv;
}

}  // namespace

WalkModel build_walk(const SimilarityGraph& g) {
  require_positive_degrees(g.degrees());
  const Index n = g.size();
  WalkModel walk{Matrix::Zero(n, n), g.degrees() / g.degrees().sum()};
  for (Index i = 0; i < n; ++i) {
    for (const Neighbor& nb : g.neighbors(i)) walk.transition(i, nb.vertex) = nb.weight / g.degree(i);
  }
  return walk;
}

double ncut_via_walk(const SimilarityGraph& g, const VertexSet& a) {
  if (a.universe() != g.size()) throw Error(ErrorKind::Dimension, "vertex set and graph sizes differ");
  const VertexSet b = a.complement();
  if (a.count() == 0 || b.count() == 0) {
    throw Error(ErrorKind::InvalidPartition, "both sides of a bipartition must be nonempty");
  }
  const double vol = g.degrees().sum();
  const double pi_a = set_measures(g, a).volume / vol;
  const double pi_b = set_measures(g, b).volume / vol;
  if (!(pi_a > 0.0 && pi_b > 0.0)) {
    throw Error(ErrorKind::InvalidPartition, "both sides need positive stationary mass");
  }
  // P(X0 in A, X1 in B) = sum_{i in A, j in B} pi_i p_ij = W(A,B) / vol(V).
  double joint_ab = 0.0;
  double joint_ba = 0.0;
  for (Index i = 0; i < g.size(); ++i) {
    const double pi_i = g.degree(i) / vol;
    for (const Neighbor& nb : g.neighbors(i)) {
      const double step = pi_i * (nb.weight / g.degree(i));
      if (a.contains(i) && b.contains(nb.vertex)) joint_ab += step;
      if (b.contains(i) && a.contains(nb.vertex)) joint_ba += step;
    }
  }
  return joint_ab / pi_a + joint_ba / pi_b;
}

CommuteKernel commute_kernel(const SimilarityGraph& g) {
  require_connected(g);
  CommuteKernel kernel;
  kernel.spectrum = eig_symmetric(build_laplacian(g, LaplacianKind::Unnormalized).dense());
  const Vector inv = inverted_spectrum(kernel.spectrum.eigenvalues);
  const Matrix& u = kernel.spectrum.eigenvectors;
  kernel.pseudo_inverse = u * inv.asDiagonal() * u.transpose();
  kernel.volume = g.degrees().sum();
  return kernel;
}

double commute_distance(const CommuteKernel& kernel, Index i, Index j) {
  check_vertex(kernel.size(), i);
  check_vertex(kernel.size(), j);
  if (i == j) return 0.0;
  const Matrix& lp = kernel.pseudo_inverse;
  return kernel.volume * (lp(i, i) - 2.0 * lp(i, j) + lp(j, j));
}

Matrix commute_distances(const CommuteKernel& kernel) {
  const Index n = kernel.size();
  Matrix c = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      c(i, j) = commute_distance(kernel, i, j);
      c(j, i) = c(i, j);
    }
  }
  return c;
}

Embedding commute_embedding(const CommuteKernel& kernel, const Decomposition& decomp) {
  if (decomp.eigenvectors.rows() != kernel.size() || decomp.eigenvectors.cols() != kernel.size()) {
    throw Error(ErrorKind::Dimension, "commute embedding needs the full spectrum of the kernel's Laplacian");
  }
  const Vector scale = inverted_spectrum(decomp.eigenvalues).cwiseSqrt();
  return decomp.eigenvectors * scale.asDiagonal();
}

double walk_simulate_commute(const SimilarityGraph& g, Index i, Index j, std::int64_t trials, std::uint64_t seed) {
  require_connected(g);
  check_vertex(g.size(), i);
  check_vertex(g.size(), j);
  if (trials < 1) throw Error(ErrorKind::InvalidParameter, "simulation needs at least one trial");
  if (i == j) return 0.0;

  // Cumulative transition weights over each sorted neighbor list.
  const Index n = g.size();
  std::vector<std::vector<double>> cumulative(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) {
    double acc = 0.0;
    for (const Neighbor& nb : g.neighbors(v)) {
      acc += nb.weight;
      cumulative[static_cast<std::size_t>(v)].push_back(acc);
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto step = [&](Index v) {
    const auto& cum = cumulative[static_cast<std::size_t>(v)];
    const double target = unit(rng) * cum.back();
    auto it = std::upper_bound(cum.begin(), cum.end(), target);
    if (it == cum.end()) --it;
    return g.neighbors(v)[static_cast<std::size_t>(it - cum.begin())].vertex;
  };

  double total = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::int64_t steps = 0;
    Index v = i;
    while (v != j) {
      v = step(v);
      ++steps;
    }
    while (v != i) {
      v = step(v);
      ++steps;
    }
    total += static_cast<double>(steps);
  }
  return total / static_cast<double>(trials);
}

}  // namespace speclust
