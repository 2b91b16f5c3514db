#pragma once

#include "speclust/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace speclust {

/// Ascending eigenvalues with eigenvectors as matching columns.
template <typename Scalar>
struct SpectralDecomposition {
  VectorX<Scalar> eigenvalues;
  MatrixX<Scalar> eigenvectors;

  Index size() const { return eigenvalues.size(); }
};

namespace detail {

// Householder reduction of a symmetric matrix to tridiagonal form. On exit
// v holds the accumulated orthogonal transform, d the diagonal and e the
// subdiagonal in e(1..n-1). Follows the EISPACK tred2 ordering.
template <typename Scalar>
void tridiagonalize(MatrixX<Scalar>& v, VectorX<Scalar>& d, VectorX<Scalar>& e) {
  const Index n = v.rows();
  d = v.row(n - 1).transpose();
  e = VectorX<Scalar>::Zero(n);

  for (Index i = n - 1; i > 0; --i) {
    Scalar scale(0);
    Scalar h(0);
    for (Index k = 0; k < i; ++k) scale += std::abs(d(k));
    if (scale == Scalar(0)) {
      e(i) = d(i - 1);
      for (Index j = 0; j < i; ++j) {
        d(j) = v(i - 1, j);
        v(i, j) = Scalar(0);
        v(j, i) = Scalar(0);
      }
    } else {
      for (Index k = 0; k < i; ++k) {
        d(k) /= scale;
        h += d(k) * d(k);
      }
      Scalar f = d(i - 1);
      Scalar g = std::sqrt(h);
      if (f > Scalar(0)) g = -g;
      e(i) = scale * g;
      h -= f * g;
      d(i - 1) = f - g;
      for (Index j = 0; j < i; ++j) e(j) = Scalar(0);

      for (Index j = 0; j < i; ++j) {
        f = d(j);
        v(j, i) = f;
        g = e(j) + v(j, j) * f;
        for (Index k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d(k);
          e(k) += v(k, j) * f;
        }
        e(j) = g;
      }
      f = Scalar(0);
      for (Index j = 0; j < i; ++j) {
        e(j) /= h;
        f += e(j) * d(j);
      }
      const Scalar hh = f / (h + h);
      for (Index j = 0; j < i; ++j) e(j) -= hh * d(j);
      for (Index j = 0; j < i; ++j) {
        f = d(j);
        g = e(j);
        for (Index k = j; k <= i - 1; ++k) v(k, j) -= (f * e(k) + g * d(k));
        d(j) = v(i - 1, j);
        v(i, j) = Scalar(0);
      }
    }
    d(i) = h;
  }

  for (Index i = 0; i < n - 1; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = Scalar(1);
    const Scalar h = d(i + 1);
    if (h != Scalar(0)) {
      for (Index k = 0; k <= i; ++k) d(k) = v(k, i + 1) / h;
      for (Index j = 0; j <= i; ++j) {
        Scalar g(0);
        for (Index k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (Index k = 0; k <= i; ++k) v(k, j) -= g * d(k);
      }
    }
    for (Index k = 0; k <= i; ++k) v(k, i + 1) = Scalar(0);
  }
  for (Index j = 0; j < n; ++j) {
    d(j) = v(n - 1, j);
    v(n - 1, j) = Scalar(0);
  }
  v(n - 1, n - 1) = Scalar(1);
  e(0) = Scalar(0);
}

// Implicit QL with Wilkinson-style shifts on the tridiagonal (d, e),
// rotating the columns of v along.
template <typename Scalar>
void tridiagonal_ql(MatrixX<Scalar>& v, VectorX<Scalar>& d, VectorX<Scalar>& e) {
  const Index n = v.rows();
  for (Index i = 1; i < n; ++i) e(i - 1) = e(i);
  e(n - 1) = Scalar(0);

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const int max_sweeps = 30 * static_cast<int>(std::max<Index>(n, 1));
  Scalar f(0);
  Scalar tst1(0);
  for (Index l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d(l)) + std::abs(e(l)));
    Index m = l;
    while (m < n) {
      if (std::abs(e(m)) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > max_sweeps) {
          throw Error(ErrorKind::InvalidInput, "symmetric eigensolver failed to converge");
        }
        Scalar g = d(l);
        Scalar p = (d(l + 1) - g) / (Scalar(2) * e(l));
        Scalar r = std::hypot(p, Scalar(1));
        if (p < Scalar(0)) r = -r;
        d(l) = e(l) / (p + r);
        d(l + 1) = e(l) * (p + r);
        const Scalar dl1 = d(l + 1);
        Scalar h = g - d(l);
        for (Index i = l + 2; i < n; ++i) d(i) -= h;
        f += h;

        p = d(m);
        Scalar c(1), c2(1), c3(1);
        const Scalar el1 = e(l + 1);
        Scalar s(0), s2(0);
        for (Index i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e(i);
          h = c * p;
          r = std::hypot(p, e(i));
          e(i + 1) = s * r;
          s = e(i) / r;
          c = p / r;
          p = c * d(i) - s * g;
          d(i + 1) = h + s * (c * g + s * d(i));
          for (Index k = 0; k < n; ++k) {
            h = v(k, i + 1);
            v(k, i + 1) = s * v(k, i) + c * h;
            v(k, i) = c * v(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e(l) / dl1;
        e(l) = s * p;
        d(l) = c * p;
      } while (std::abs(e(l)) > eps * tst1);
    }
    d(l) += f;
    e(l) = Scalar(0);
  }
}

}  // namespace detail

/// Flips each column so its largest-magnitude entry is positive; ties go to
/// the lowest row index.
template <typename Scalar>
void normalize_signs(MatrixX<Scalar>& vectors) {
  for (Index j = 0; j < vectors.cols(); ++j) {
    Index arg = 0;
    Scalar best(-1);
    for (Index i = 0; i < vectors.rows(); ++i) {
      const Scalar a = std::abs(vectors(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (vectors(arg, j) < Scalar(0)) vectors.col(j) = -vectors.col(j);
  }
}

/// Full eigendecomposition of a dense symmetric matrix by Householder
/// tridiagonalization and implicit QL. Input symmetry is checked to 1e-10
/// relative to the largest entry; the symmetric part is what gets solved.
template <typename Derived>
SpectralDecomposition<typename Derived::Scalar> eig_symmetric(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorKind::Dimension, "eigensolver input must be square");
  const Index n = m.rows();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "eigensolver input is empty");
  if (!m.allFinite()) throw Error(ErrorKind::InvalidInput, "eigensolver input has non-finite entries");

  const Scalar scale = std::max(Scalar(1), m.cwiseAbs().maxCoeff());
  const Scalar asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > Scalar(1e-10) * scale) {
    throw Error(ErrorKind::InvalidInput, "eigensolver input is not symmetric (max asymmetry " +
                                             std::to_string(static_cast<double>(asym)) + ")");
  }

  MatrixX<Scalar> v = (m + m.transpose()) / Scalar(2);
  VectorX<Scalar> d;
  VectorX<Scalar> e;
  detail::tridiagonalize(v, d, e);
  detail::tridiagonal_ql(v, d, e);

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return d(a) < d(b); });

  SpectralDecomposition<Scalar> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    const Index src = order[static_cast<std::size_t>(j)];
    out.eigenvalues(j) = d(src);
    out.eigenvectors.col(j) = v.col(src);
  }
  normalize_signs(out.eigenvectors);
  return out;
}

/// The eigenvectors of the k smallest eigenvalues as an n x k embedding.
template <typename Scalar>
MatrixX<Scalar> first_k(const SpectralDecomposition<Scalar>& decomp, Index k) {
  if (k < 1 || k > decomp.eigenvectors.cols()) {
    throw Error(ErrorKind::InvalidParameter, "k must lie in 1.." + std::to_string(decomp.eigenvectors.cols()) +
                                                 ", got " + std::to_string(k));
  }
  return decomp.eigenvectors.leftCols(k);
}

/// lambda_{k+1} - lambda_k for 1-based k in 1..n-1.
template <typename Derived>
typename Derived::Scalar eigengap(const Eigen::MatrixBase<Derived>& eigenvalues, Index k) {
  const Index n = eigenvalues.size();
  if (k < 1 || k > n - 1) {
    throw Error(ErrorKind::InvalidParameter, "eigengap index must lie in 1.." + std::to_string(n - 1) +
                                                 ", got " + std::to_string(k));
  }
  return eigenvalues(k) - eigenvalues(k - 1);
}

}  // namespace speclust
