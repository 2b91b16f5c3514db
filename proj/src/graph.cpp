#include "speclust/graph.hpp"

#include "speclust/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace speclust {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::Dimension, std::string(what) + " matrix must be square");
  }
}

}  // namespace

SimilarityGraph SimilarityGraph::from_edges(Index n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "negative vertex count");
  SimilarityGraph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorKind::InvalidInput, "edge endpoint outside 1.." + std::to_string(n));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw Error(ErrorKind::InvalidInput, "edge weights must be finite and nonnegative");
    }
    if (e.u == e.v || e.weight == 0.0) continue;
    const Index lo = std::min(e.u, e.v);
    const Index hi = std::max(e.u, e.v);
    g.adjacency_[static_cast<std::size_t>(lo)].push_back({hi, e.weight});
  }
  // Merge duplicates on the upper triangle, then mirror.
  for (auto& list : g.adjacency_) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    std::vector<Neighbor> merged;
    for (const Neighbor& nb : list) {
      if (!merged.empty() && merged.back().vertex == nb.vertex) {
        merged.back().weight += nb.weight;
      } else {
        merged.push_back(nb);
      }
    }
    list = std::move(merged);
  }
  for (Index i = 0; i < n; ++i) {
    for (const Neighbor& nb : g.adjacency_[static_cast<std::size_t>(i)]) {
      if (nb.vertex > i) g.adjacency_[static_cast<std::size_t>(nb.vertex)].push_back({i, nb.weight});
    }
  }
  g.finalize();
  return g;
}

SimilarityGraph SimilarityGraph::from_dense(const Matrix& w) {
  require_square(w, "weight");
  const Index n = w.rows();
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (w(i, j) != 0.0) edges.push_back({i, j, w(i, j)});
    }
  }
  return from_edges(n, edges);
}

void SimilarityGraph::finalize() {
  const Index n = size();
  degrees_ = Vector::Zero(n);
  edge_count_ = 0;
  for (Index i = 0; i < n; ++i) {
    auto& list = adjacency_[static_cast<std::size_t>(i)];
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    double d = 0.0;
    for (const Neighbor& nb : list) d += nb.weight;
    degrees_(i) = d;
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

double SimilarityGraph::weight(Index i, Index j) const {
  const auto& list = neighbors(i);
  auto it = std::lower_bound(list.begin(), list.end(), j,
                             [](const Neighbor& nb, Index v) { return nb.vertex < v; });
  return (it != list.end() && it->vertex == j) ? it->weight : 0.0;
}

double SimilarityGraph::total_weight() const {
  double total = 0.0;
  for (const Edge& e : edges()) total += e.weight;
  return total;
}

std::vector<Edge> SimilarityGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Index i = 0; i < size(); ++i) {
    for (const Neighbor& nb : neighbors(i)) {
      if (nb.vertex > i) out.push_back({i, nb.vertex, nb.weight});
    }
  }
  return out;
}

Eigen::SparseMatrix<double> SimilarityGraph::adjacency_matrix() const {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edge_count_);
  for (Index i = 0; i < size(); ++i) {
    for (const Neighbor& nb : neighbors(i)) triplets.emplace_back(i, nb.vertex, nb.weight);
  }
  Eigen::SparseMatrix<double> w(size(), size());
  w.setFromTriplets(triplets.begin(), triplets.end());
  return w;
}

Matrix SimilarityGraph::dense_adjacency() const {
  Matrix w = Matrix::Zero(size(), size());
  for (Index i = 0; i < size(); ++i) {
    for (const Neighbor& nb : neighbors(i)) w(i, nb.vertex) = nb.weight;
  }
  return w;
}

SimilarityGraph SimilarityGraph::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorKind::InvalidParameter, "weight scale factor must be finite and positive");
  }
  SimilarityGraph g = *this;
  for (auto& list : g.adjacency_) {
    for (Neighbor& nb : list) nb.weight *= factor;
  }
  g.finalize();
  return g;
}

VertexSet::VertexSet(Index n, std::span<const Index> members) : VertexSet(n) {
  for (Index i : members) {
    if (i < 0 || i >= n) throw Error(ErrorKind::InvalidInput, "vertex set member outside the graph");
    insert(i);
  }
}

Index VertexSet::count() const {
  return static_cast<Index>(std::count(bits_.begin(), bits_.end(), char{1}));
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) c.bits_[i] = bits_[i] ? 0 : 1;
  return c;
}

std::vector<Index> VertexSet::members() const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

SimilarityGraph build_eps_graph(const Matrix& distances, double eps) {
  require_square(distances, "distance");
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidParameter, "eps must be positive");
  const Index n = distances.rows();
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (distances(i, j) < eps) edges.push_back({i, j, 1.0});
    }
  }
  return SimilarityGraph::from_edges(n, edges);
}

SimilarityGraph build_knn_graph(const Matrix& distances, const Matrix& similarities, Index k, bool mutual) {
  require_square(distances, "distance");
  require_square(similarities, "similarity");
  const Index n = distances.rows();
  if (similarities.rows() != n) throw Error(ErrorKind::Dimension, "distance and similarity sizes differ");
  if (k < 1 || k > n - 1) {
    throw Error(ErrorKind::InvalidParameter,
                "knn k must lie in 1.." + std::to_string(n - 1) + ", got " + std::to_string(k));
  }

  // chosen(i, j): j is among i's k nearest.
  std::vector<std::vector<char>> chosen(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Index> order;
  for (Index i = 0; i < n; ++i) {
    order.clear();
    for (Index j = 0; j < n; ++j) {
      if (j != i) order.push_back(j);
    }
    std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](Index a, Index b) {
      const double da = distances(i, a);
      const double db = distances(i, b);
      return da < db || (da == db && a < b);
    });
    for (Index t = 0; t < k; ++t) chosen[static_cast<std::size_t>(i)][static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = 1;
  }

  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const bool ij = chosen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
      const bool ji = chosen[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0;
      if (mutual ? (ij && ji) : (ij || ji)) edges.push_back({i, j, similarities(i, j)});
    }
  }
  return SimilarityGraph::from_edges(n, edges);
}

SimilarityGraph build_full_graph(const Matrix& similarities) {
  require_square(similarities, "similarity");
  const Index n = similarities.rows();
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (similarities(i, j) > 0.0) edges.push_back({i, j, similarities(i, j)});
    }
  }
  return SimilarityGraph::from_edges(n, edges);
}

Partition connected_components(const SimilarityGraph& g) {
  const Index n = g.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "graph has no vertices");
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  int next = 0;
  std::queue<Index> frontier;
  for (Index s = 0; s < n; ++s) {
    if (labels[static_cast<std::size_t>(s)] != 0) continue;
    labels[static_cast<std::size_t>(s)] = ++next;
    frontier.push(s);
    while (!frontier.empty()) {
      const Index v = frontier.front();
      frontier.pop();
      for (const Neighbor& nb : g.neighbors(v)) {
        int& l = labels[static_cast<std::size_t>(nb.vertex)];
        if (l == 0) {
          l = next;
          frontier.push(nb.vertex);
        }
      }
    }
  }
  return Partition::from_labels(std::move(labels), next);
}

SetMeasures set_measures(const SimilarityGraph& g, const VertexSet& a) {
  if (a.universe() != g.size()) throw Error(ErrorKind::Dimension, "vertex set and graph sizes differ");
  SetMeasures m{0, 0.0};
  for (Index i = 0; i < g.size(); ++i) {
    if (a.contains(i)) {
      ++m.size;
      m.volume += g.degree(i);
    }
  }
  return m;
}

double cut_weight(const SimilarityGraph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.size() || b.universe() != g.size()) {
    throw Error(ErrorKind::Dimension, "vertex set and graph sizes differ");
  }
  double total = 0.0;
  for (Index i = 0; i < g.size(); ++i) {
    if (!a.contains(i)) continue;
    for (const Neighbor& nb : g.neighbors(i)) {
      if (b.contains(nb.vertex)) total += nb.weight;
    }
  }
  return total;
}

void write_edge_list(std::ostream& out, const SimilarityGraph& g) {
  out << "# vertices " << g.size() << '\n';
  for (const Edge& e : g.edges()) {
    out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << format_real(e.weight) << '\n';
  }
}

SimilarityGraph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<Edge> edges;
  Index declared = -1;
  Index max_vertex = 0;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      std::istringstream header{std::string(text.substr(1))};
      std::string key;
      Index count = 0;
      if (header >> key >> count && key == "vertices" && count >= 0) declared = count;
      continue;
    }
    std::istringstream fields{std::string(text)};
    std::string si, sj, sw, extra;
    if (!(fields >> si >> sj >> sw) || (fields >> extra)) {
      throw Error(ErrorKind::Parse, "edge list row " + std::to_string(row) + ": expected \"i j w\"");
    }
    const auto i = parse_real(si);
    const auto j = parse_real(sj);
    const auto w = parse_real(sw);
    if (!i || !j || !w || *i < 1 || *j < 1 || *i != std::floor(*i) || *j != std::floor(*j) || !std::isfinite(*w) ||
        *w < 0.0) {
      throw Error(ErrorKind::Parse, "edge list row " + std::to_string(row) + ": bad vertex index or weight");
    }
    const auto u = static_cast<Index>(*i) - 1;
    const auto v = static_cast<Index>(*j) - 1;
    max_vertex = std::max({max_vertex, u + 1, v + 1});
    edges.push_back({u, v, *w});
  }
  if (declared >= 0 && max_vertex > declared) {
    throw Error(ErrorKind::Parse, "edge list references vertex " + std::to_string(max_vertex) + " beyond declared " +
                                      std::to_string(declared));
  }
  const Index n = declared >= 0 ? declared : max_vertex;
  if (n == 0) throw Error(ErrorKind::Parse, "edge list defines no vertices");
  return SimilarityGraph::from_edges(n, edges);
}

void save_edge_list(const std::string& path, const SimilarityGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  write_edge_list(out, g);
}

SimilarityGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return read_edge_list(in);
}

}  // namespace speclust
