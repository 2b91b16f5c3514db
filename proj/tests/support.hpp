#pragma once

#include "speclust/core.hpp"
#include "speclust/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace speclust::testing {

using Rng = std::mt19937_64;

inline SimilarityGraph graph_of(Index n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return SimilarityGraph::from_edges(n, list);
}

inline SimilarityGraph unit_path(Index n) {
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return SimilarityGraph::from_edges(n, edges);
}

inline SimilarityGraph unit_triangle() { return graph_of(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline Index pick(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

// Erdos-Renyi style graph with weights in [0.1, 2]. With `connected` a
// random spanning tree is laid down first.
inline SimilarityGraph random_graph(Rng& rng, Index n, double density, bool connected = true) {
  std::vector<Edge> edges;
  if (connected) {
    std::vector<Index> order(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (Index t = 1; t < n; ++t) {
      const Index parent = order[static_cast<std::size_t>(pick(rng, 0, t - 1))];
      edges.push_back({order[static_cast<std::size_t>(t)], parent, uniform(rng, 0.1, 2.0)});
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (uniform(rng, 0.0, 1.0) < density) edges.push_back({i, j, uniform(rng, 0.1, 2.0)});
    }
  }
  return SimilarityGraph::from_edges(n, edges);
}

// m disjoint connected blocks of random sizes in [min_size, max_size],
// vertices shuffled so blocks interleave. `block` receives each vertex's
// 0-based block id.
inline SimilarityGraph planted_components(Rng& rng, int m, Index min_size, Index max_size, std::vector<int>& block,
                                          double density = 0.5) {
  std::vector<Index> sizes;
  Index n = 0;
  for (int c = 0; c < m; ++c) {
    sizes.push_back(pick(rng, min_size, max_size));
    n += sizes.back();
  }
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);

  block.assign(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  Index offset = 0;
  for (int c = 0; c < m; ++c) {
    const Index s = sizes[static_cast<std::size_t>(c)];
    const SimilarityGraph local = random_graph(rng, s, density, true);
    for (Index i = 0; i < s; ++i) block[static_cast<std::size_t>(perm[static_cast<std::size_t>(offset + i)])] = c;
    for (const Edge& e : local.edges()) {
      edges.push_back({perm[static_cast<std::size_t>(offset + e.u)], perm[static_cast<std::size_t>(offset + e.v)],
                       e.weight});
    }
    offset += s;
  }
  return SimilarityGraph::from_edges(n, edges);
}

// Random nonempty proper subset.
inline VertexSet random_side(Rng& rng, Index n) {
  VertexSet a(n);
  while (a.count() == 0 || a.count() == n) {
    a = VertexSet(n);
    for (Index i = 0; i < n; ++i) {
      if (uniform(rng, 0.0, 1.0) < 0.5) a.insert(i);
    }
  }
  return a;
}

inline Partition random_partition(Rng& rng, Index n, int k) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = static_cast<int>(i % k) + 1;
  std::shuffle(labels.begin(), labels.end(), rng);
  return Partition::from_labels(labels, k);
}

// Fraction of points whose label matches the truth under the best
// one-to-one relabeling (exhaustive over permutations; k is small).
inline double matched_agreement(const std::vector<int>& truth, const Partition& p) {
  const int k = std::max(p.k(), *std::max_element(truth.begin(), truth.end()));
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) perm[static_cast<std::size_t>(c)] = c + 1;
  std::size_t best = 0;
  do {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      if (perm[static_cast<std::size_t>(p[i] - 1)] == truth[i]) ++hits;
    }
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(truth.size());
}

}  // namespace speclust::testing
