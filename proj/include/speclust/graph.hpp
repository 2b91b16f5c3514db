#pragma once

#include "speclust/core.hpp"

#include <Eigen/SparseCore>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace speclust {

struct Neighbor {
  Index vertex;
  double weight;
};

/// Undirected edge between 0-based vertices.
struct Edge {
  Index u;
  Index v;
  double weight;
};

/// Sparse symmetric nonnegative weighted adjacency with cached degrees.
///
/// Neighbor lists are sorted by vertex index, hold no self-loops and no zero
/// weights, and every edge is stored in both endpoint lists with the same
/// value, so w_ij == w_ji holds bit for bit.
class SimilarityGraph {
 public:
  SimilarityGraph() = default;

  /// Duplicate edges are summed; self-loops and non-positive weights are dropped.
  static SimilarityGraph from_edges(Index n, std::span<const Edge> edges);

  /// Reads the strict upper triangle of `w`; the diagonal is ignored.
  static SimilarityGraph from_dense(const Matrix& w);

  Index size() const noexcept { return static_cast<Index>(adjacency_.size()); }
  const std::vector<Neighbor>& neighbors(Index i) const { return adjacency_[static_cast<std::size_t>(i)]; }
  const Vector& degrees() const noexcept { return degrees_; }
  double degree(Index i) const { return degrees_(i); }

  /// w_ij, zero when no edge is stored.
  double weight(Index i, Index j) const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  double total_weight() const;

  /// Edges with u < v in (u, v) lexicographic order.
  std::vector<Edge> edges() const;

  Eigen::SparseMatrix<double> adjacency_matrix() const;
  Matrix dense_adjacency() const;

  /// Same graph with every weight multiplied by `factor` > 0.
  SimilarityGraph scaled(double factor) const;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  Vector degrees_;
  std::size_t edge_count_ = 0;

  void finalize();
};

/// Subset of {0..n-1} as an indicator.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Index n) : bits_(static_cast<std::size_t>(n), 0) {}
  VertexSet(Index n, std::span<const Index> members);

  Index universe() const noexcept { return static_cast<Index>(bits_.size()); }
  bool contains(Index i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
  void insert(Index i) { bits_[static_cast<std::size_t>(i)] = 1; }
  void erase(Index i) { bits_[static_cast<std::size_t>(i)] = 0; }
  Index count() const;
  VertexSet complement() const;
  std::vector<Index> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<char> bits_;
};

/// Edge present iff d_ij < eps, unit weight.
SimilarityGraph build_eps_graph(const Matrix& distances, double eps);

/// k-nearest-neighbor graph weighted by `similarities`. Neighbor ties are
/// broken by smaller vertex index. `mutual` keeps an edge only when both
/// endpoints list each other; otherwise either direction suffices.
SimilarityGraph build_knn_graph(const Matrix& distances, const Matrix& similarities, Index k,
                                bool mutual);

SimilarityGraph build_full_graph(const Matrix& similarities);

/// Components labelled in order of their smallest member.
Partition connected_components(const SimilarityGraph& g);

struct SetMeasures {
  Index size;
  double volume;
};

SetMeasures set_measures(const SimilarityGraph& g, const VertexSet& a);

/// W(A,B) = sum over i in A, j in B of w_ij.
double cut_weight(const SimilarityGraph& g, const VertexSet& a, const VertexSet& b);

/// Edge-list text: optional "# vertices N" header, then "i j w" per line,
/// 1-based, i < j.
void write_edge_list(std::ostream& out, const SimilarityGraph& g);
SimilarityGraph read_edge_list(std::istream& in);
void save_edge_list(const std::string& path, const SimilarityGraph& g);
SimilarityGraph load_edge_list(const std::string& path);

}  // namespace speclust
