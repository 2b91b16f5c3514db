#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "speclust/diagnostics.hpp"
#include "speclust/eigensolver.hpp"
#include "speclust/laplacian.hpp"
#include "speclust/spectrum.hpp"
#include "support.hpp"

#include <Eigen/Eigenvalues>

using namespace speclust;
using namespace speclust::testing;

namespace {

Matrix random_symmetric(Rng& rng, Index n) {
  Matrix a(n, n);
  for (Index i = 0; i < a.size(); ++i) a(i) = uniform(rng, -1, 1);
  return (a + a.transpose()) / 2.0;
}

void check_decomposition(const Matrix& m, const Decomposition& d) {
  const Index n = m.rows();
  const double scale = std::max(1.0, m.norm());
  for (Index j = 1; j < n; ++j) CHECK(d.eigenvalues(j - 1) <= d.eigenvalues(j));
  CHECK((d.eigenvectors.transpose() * d.eigenvectors - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-8);
  for (Index j = 0; j < n; ++j) {
    CHECK((m * d.eigenvectors.col(j) - d.eigenvalues(j) * d.eigenvectors.col(j)).norm() <= 1e-8 * scale);
    Index arg = 0;
    d.eigenvectors.col(j).cwiseAbs().maxCoeff(&arg);
    CHECK(d.eigenvectors(arg, j) > 0.0);
  }
}

}  // namespace

TEST_CASE("identity") {
  const Decomposition d = eig_symmetric(Matrix::Identity(3, 3));
  CHECK(d.eigenvalues == Vector::Ones(3));
  check_decomposition(Matrix::Identity(3, 3), d);
}

TEST_CASE("single edge Laplacian") {
  const Matrix l = (Matrix(2, 2) << 1, -1, -1, 1).finished();
  const Decomposition d = eig_symmetric(l);
  CHECK(std::abs(d.eigenvalues(0)) <= 1e-15);
  CHECK(d.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(std::abs(d.eigenvectors(0, 0) - d.eigenvectors(1, 0)) <= 1e-15);
}

TEST_CASE("1x1 and diagonal inputs") {
  const Decomposition one = eig_symmetric((Matrix(1, 1) << -3.0).finished());
  CHECK(one.eigenvalues(0) == -3.0);
  CHECK(one.eigenvectors(0, 0) == 1.0);
  const Matrix diag = Vector((Vector(4) << 3, -1, 2, 0).finished()).asDiagonal();
  const Decomposition d = eig_symmetric(diag);
  CHECK(d.eigenvalues == (Vector(4) << -1, 0, 2, 3).finished());
}

TEST_CASE("random symmetric matrices against Eigen's SelfAdjointEigenSolver") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = pick(rng, 2, 40);
    const Matrix m = random_symmetric(rng, n) * uniform(rng, 0.01, 100.0);
    const Decomposition d = eig_symmetric(m);
    check_decomposition(m, d);
    Eigen::SelfAdjointEigenSolver<Matrix> oracle(m);
    CHECK((d.eigenvalues - oracle.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, m.norm()));
    const Matrix rebuilt = d.eigenvectors * d.eigenvalues.asDiagonal() * d.eigenvectors.transpose();
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() <= 1e-8 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("random 8x8 reconstruction") {
  Rng rng(8);
  const Matrix m = random_symmetric(rng, 8);
  const Decomposition d = eig_symmetric(m);
  CHECK((d.eigenvectors * d.eigenvalues.asDiagonal() * d.eigenvectors.transpose() - m).norm() <= 1e-8);
}

TEST_CASE("float scalar instantiation") {
  Rng rng(9);
  const Matrix m = random_symmetric(rng, 6);
  const auto d = eig_symmetric(m.cast<float>().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> oracle(m);
  CHECK((d.eigenvalues.cast<double>() - oracle.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-4);
}

TEST_CASE("degenerate eigenspaces are compared as subspaces") {
  // Two disjoint triangles: eigenvalue 0 and 3 each with multiplicity 2,
  // eigenvalue 3 inside each triangle doubles too.
  const SimilarityGraph g =
      graph_of(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  const Matrix l = build_laplacian(g, LaplacianKind::Unnormalized).dense();
  const Decomposition d = eig_symmetric(l);
  check_decomposition(l, d);
  Eigen::SelfAdjointEigenSolver<Matrix> oracle(l);
  CHECK(subspace_distance(d.eigenvectors.leftCols(2), oracle.eigenvectors().leftCols(2)) <= 1e-8);
  CHECK(subspace_distance(d.eigenvectors.rightCols(4), oracle.eigenvectors().rightCols(4)) <= 1e-8);
}

TEST_CASE("errors") {
  Matrix asym = Matrix::Identity(3, 3);
  asym(0, 1) = 1e-3;
  try {
    eig_symmetric(asym);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
  asym(0, 1) = 1e-12;
  CHECK_NOTHROW(eig_symmetric(asym));
  CHECK_THROWS_AS(eig_symmetric(Matrix(2, 3)), Error);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = NAN;
  CHECK_THROWS_AS(eig_symmetric(bad), Error);
}

TEST_CASE("deterministic: repeated calls are bit identical") {
  Rng rng(10);
  const Matrix m = random_symmetric(rng, 25);
  const Decomposition a = eig_symmetric(m);
  const Decomposition b = eig_symmetric(m);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("first_k") {
  Rng rng(12);
  const SimilarityGraph g = random_graph(rng, 9, 0.3);
  const Decomposition d = laplacian_spectrum(build_laplacian(g, LaplacianKind::Unnormalized));
  CHECK(first_k(d, 9) == d.eigenvectors);
  const Matrix u1 = first_k(d, 1);
  CHECK((u1.array() - u1(0, 0)).abs().maxCoeff() <= 1e-12);
  CHECK_THROWS_AS(first_k(d, 0), Error);
  CHECK_THROWS_AS(first_k(d, 10), Error);

  std::vector<int> block;
  const SimilarityGraph four = planted_components(rng, 4, 3, 6, block);
  const Decomposition d4 = laplacian_spectrum(build_laplacian(four, LaplacianKind::Unnormalized));
  const Matrix u = first_k(d4, 4);
  // rows of the same component coincide, rows of different components are orthogonal
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = 0; j < block.size(); ++j) {
      const double dot = u.row(static_cast<Index>(i)).dot(u.row(static_cast<Index>(j)));
      if (block[i] == block[j]) {
        CHECK((u.row(static_cast<Index>(i)) - u.row(static_cast<Index>(j))).norm() <= 1e-8);
      } else {
        CHECK(std::abs(dot) <= 1e-8);
      }
    }
  }
}

TEST_CASE("generalized eigenproblem") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const SimilarityGraph g = random_graph(rng, pick(rng, 3, 20), 0.3);
    const auto l = build_laplacian(g, LaplacianKind::Unnormalized);
    const Index k = pick(rng, 1, g.size());
    const Decomposition ge = generalized_eig(l, g.degrees(), k);
    CHECK(ge.eigenvectors.cols() == k);
    const Matrix lu = l.dense() * ge.eigenvectors;
    const Matrix du = g.degrees().asDiagonal() * ge.eigenvectors;
    CHECK((lu - du * ge.eigenvalues.asDiagonal()).cwiseAbs().maxCoeff() <= 1e-8);
    const Decomposition rw = laplacian_spectrum(build_laplacian(g, LaplacianKind::RandomWalk));
    CHECK((ge.eigenvalues - rw.eigenvalues.head(k)).cwiseAbs().maxCoeff() <= 1e-8);
    // k = 1 gives a constant vector
    const Matrix c = generalized_eig(l, g.degrees(), 1).eigenvectors;
    CHECK((c.array() - c(0, 0)).abs().maxCoeff() <= 1e-10);
  }
  const SimilarityGraph iso = graph_of(3, {{0, 1, 1.0}});
  CHECK_THROWS_AS(
      generalized_eig(build_laplacian(iso, LaplacianKind::Unnormalized), iso.degrees(), 2), Error);
}

TEST_CASE("generalized eigenvectors of a regular graph match L's up to scaling") {
  std::vector<Edge> edges;
  for (Index i = 0; i < 10; ++i) {
    edges.push_back({i, (i + 1) % 10, 1.0});
    edges.push_back({i, (i + 3) % 10, 1.0});
  }
  const SimilarityGraph g = SimilarityGraph::from_edges(10, edges);
  const auto l = build_laplacian(g, LaplacianKind::Unnormalized);
  const Decomposition ge = generalized_eig(l, g.degrees(), 3);
  const Decomposition plain = laplacian_spectrum(l);
  CHECK((ge.eigenvalues * 4.0 - plain.eigenvalues.head(3)).cwiseAbs().maxCoeff() <= 1e-10);
  const Matrix scaled = ge.eigenvectors * 2.0;
  CHECK(subspace_distance(scaled, plain.eigenvectors.leftCols(3)) <= 1e-8);
}

TEST_CASE("eigengap") {
  const Vector eigs = (Vector(4) << 0, 0, 1, 1.1).finished();
  CHECK(eigengap(eigs, 2) == 1.0);
  CHECK(eigengap(Vector::Constant(5, 2.0), 3) == 0.0);
  CHECK_THROWS_AS(eigengap(eigs, 0), Error);
  CHECK_THROWS_AS(eigengap(eigs, 4), Error);

  Rng rng(14);
  std::vector<int> block;
  const SimilarityGraph g = planted_components(rng, 4, 4, 8, block, 0.8);
  const Decomposition d = laplacian_spectrum(build_laplacian(g, LaplacianKind::Unnormalized));
  for (Index k = 1; k < 4; ++k) CHECK(eigengap(d.eigenvalues, k) <= 1e-8);
  CHECK(eigengap(d.eigenvalues, 4) > 1e-3);
}

TEST_CASE("property: Laplacian spectra are nonnegative with smallest eigenvalue 0") {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const SimilarityGraph g = random_graph(rng, pick(rng, 2, 25), 0.2, trial % 2 == 0);
    const Decomposition d = laplacian_spectrum(build_laplacian(g, LaplacianKind::Unnormalized));
    CHECK(d.eigenvalues.minCoeff() >= -1e-10);
    CHECK(std::abs(d.eigenvalues(0)) <= 1e-10);
  }
}
