#pragma once

#include "speclust/eigensolver.hpp"
#include "speclust/graph.hpp"
#include "speclust/laplacian.hpp"

namespace speclust {

using Decomposition = SpectralDecomposition<double>;

/// Full spectrum of a Laplacian. The random-walk kind is solved through its
/// symmetric equivalent; its eigenvectors come back as u = D^-1/2 w, which
/// are D-orthonormal rather than orthonormal.
Decomposition laplacian_spectrum(const LaplacianMatrix& lap);

/// First k generalized eigenpairs of L u = lambda D u, computed from the
/// L_sym decomposition. Returns k eigenvalues and an n x k matrix of
/// D-orthonormal eigenvectors.
Decomposition generalized_eig(const LaplacianMatrix& unnormalized, const Vector& degrees, Index k);

/// Number of eigenvalues below tol * max(lambda_max, tiny).
Index zero_multiplicity(const Vector& ascending, double relative_tol = 1e-8);

}  // namespace speclust
