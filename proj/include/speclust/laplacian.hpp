#pragma once

#include "speclust/core.hpp"
#include "speclust/graph.hpp"

#include <Eigen/SparseCore>

#include <string_view>

namespace speclust {

enum class LaplacianKind {
  Unnormalized,   // L = D - W
  SymNormalized,  // L_sym = D^-1/2 L D^-1/2
  RandomWalk,     // L_rw = D^-1 L
};

std::string_view to_string(LaplacianKind kind);
/// Accepts "unnormalized"/"l", "sym", "rw" (case-sensitive).
LaplacianKind parse_laplacian_kind(std::string_view name);

struct LaplacianMatrix {
  LaplacianKind kind;
  Eigen::SparseMatrix<double> values;
  Vector degrees;

  Index size() const { return values.rows(); }
  Matrix dense() const { return Matrix(values); }
};

/// Normalized kinds throw ErrorKind::IsolatedVertex naming the first
/// zero-degree vertex (1-based).
LaplacianMatrix build_laplacian(const SimilarityGraph& g, LaplacianKind kind);

/// f' M f for the Unnormalized and SymNormalized kinds.
double quadratic_form(const LaplacianMatrix& lap, const Eigen::Ref<const Vector>& f);

/// The L_sym that is similar to a given L_rw: L_sym = D^1/2 L_rw D^-1/2.
/// Eigenvectors w of the result map back as u = D^-1/2 w using the
/// degrees carried along.
LaplacianMatrix to_sym_equivalent(const LaplacianMatrix& lap);

/// Throws IsolatedVertex when some degree is not strictly positive.
void require_positive_degrees(const Vector& degrees);

}  // namespace speclust
