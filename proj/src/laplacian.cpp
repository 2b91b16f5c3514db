#include "speclust/laplacian.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace speclust {

std::string_view to_string(LaplacianKind kind) {
  switch (kind) {
    case LaplacianKind::Unnormalized: return "unnormalized";
    case LaplacianKind::SymNormalized: return "sym";
    case LaplacianKind::RandomWalk: return "rw";
  }
  return "unknown";
}

LaplacianKind parse_laplacian_kind(std::string_view name) {
  if (name == "unnormalized" || name == "l") return LaplacianKind::Unnormalized;
  if (name == "sym") return LaplacianKind::SymNormalized;
  if (name == "rw") return LaplacianKind::RandomWalk;
  throw Error(ErrorKind::InvalidParameter, "unknown Laplacian kind: " + std::string(name));
}

void require_positive_degrees(const Vector& degrees) {
  for (Index i = 0; i < degrees.size(); ++i) {
    if (!(degrees(i) > 0.0)) {
      throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(i + 1) + " has zero degree");
    }
  }
}

LaplacianMatrix build_laplacian(const SimilarityGraph& g, LaplacianKind kind) {
  const Index n = g.size();
  const Vector& d = g.degrees();
  if (kind != LaplacianKind::Unnormalized) require_positive_degrees(d);

  Vector inv_sqrt = Vector::Zero(n);
  if (kind == LaplacianKind::SymNormalized) inv_sqrt = d.cwiseSqrt().cwiseInverse();

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * g.edge_count() + static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    triplets.emplace_back(i, i, kind == LaplacianKind::Unnormalized ? d(i) : 1.0);
    for (const Neighbor& nb : g.neighbors(i)) {
      double v = 0.0;
      switch (kind) {
        case LaplacianKind::Unnormalized: v = -nb.weight; break;
        case LaplacianKind::SymNormalized: v = -nb.weight * inv_sqrt(i) * inv_sqrt(nb.vertex); break;
        case LaplacianKind::RandomWalk: v = -nb.weight / d(i); break;
      }
      triplets.emplace_back(i, nb.vertex, v);
    }
  }
  LaplacianMatrix lap{kind, Eigen::SparseMatrix<double>(n, n), d};
  lap.values.setFromTriplets(triplets.begin(), triplets.end());
  return lap;
}

double quadratic_form(const LaplacianMatrix& lap, const Eigen::Ref<const Vector>& f) {
  if (lap.kind == LaplacianKind::RandomWalk) {
    throw Error(ErrorKind::InvalidParameter, "quadratic form is defined for the symmetric Laplacians only");
  }
  if (f.size() != lap.size()) {
    throw Error(ErrorKind::Dimension, "vector length " + std::to_string(f.size()) + " does not match " +
                                          std::to_string(lap.size()) + " vertices");
  }
  return f.dot(lap.values * f);
}

LaplacianMatrix to_sym_equivalent(const LaplacianMatrix& lap) {
  if (lap.kind != LaplacianKind::RandomWalk) {
    throw Error(ErrorKind::InvalidParameter, "symmetric equivalent expects a random-walk Laplacian");
  }
  require_positive_degrees(lap.degrees);
  const Vector sqrt_d = lap.degrees.cwiseSqrt();
  LaplacianMatrix sym{LaplacianKind::SymNormalized, lap.values, lap.degrees};
  for (Index col = 0; col < sym.values.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(sym.values, col); it; ++it) {
      if (it.row() != it.col()) it.valueRef() *= sqrt_d(it.row()) / sqrt_d(it.col());
    }
  }
  return sym;
}

}  // namespace speclust
