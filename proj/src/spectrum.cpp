#include "speclust/spectrum.hpp"

#include <string>

namespace speclust {

namespace {

Decomposition back_transform(Decomposition sym, const Vector& degrees) {
  const Vector inv_sqrt = degrees.cwiseSqrt().cwiseInverse();
  sym.eigenvectors = inv_sqrt.asDiagonal() * sym.eigenvectors;
  return sym;
}

}  // namespace

Decomposition laplacian_spectrum(const LaplacianMatrix& lap) {
  if (lap.kind == LaplacianKind::RandomWalk) {
    const LaplacianMatrix sym = to_sym_equivalent(lap);
    return back_transform(eig_symmetric(sym.dense()), lap.degrees);
  }
  return eig_symmetric(lap.dense());
}

Decomposition generalized_eig(const LaplacianMatrix& unnormalized, const Vector& degrees, Index k) {
  if (unnormalized.kind != LaplacianKind::Unnormalized) {
    throw Error(ErrorKind::InvalidParameter, "generalized eigenproblem expects the unnormalized Laplacian");
  }
  if (degrees.size() != unnormalized.size()) {
    throw Error(ErrorKind::Dimension, "degree vector length does not match the Laplacian");
  }
  require_positive_degrees(degrees);
  const Index n = unnormalized.size();
  if (k < 1 || k > n) {
    throw Error(ErrorKind::InvalidParameter, "k must lie in 1.." + std::to_string(n) + ", got " + std::to_string(k));
  }
  const Vector inv_sqrt = degrees.cwiseSqrt().cwiseInverse();
  const Matrix sym = inv_sqrt.asDiagonal() * unnormalized.dense() * inv_sqrt.asDiagonal();
  Decomposition full = back_transform(eig_symmetric(sym), degrees);
  return {full.eigenvalues.head(k), full.eigenvectors.leftCols(k)};
}

Index zero_multiplicity(const Vector& ascending, double relative_tol) {
  if (ascending.size() == 0) return 0;
  const double scale = std::max(ascending.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  Index count = 0;
  for (Index i = 0; i < ascending.size(); ++i) {
    if (ascending(i) < relative_tol * scale) ++count;
  }
  return count;
}

}  // namespace speclust
