#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "speclust/cuts.hpp"
#include "speclust/laplacian.hpp"
#include "speclust/randomwalk.hpp"
#include "support.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

using namespace speclust;
using namespace speclust::testing;

TEST_CASE("walk on a single edge and a triangle") {
  const WalkModel edge = build_walk(graph_of(2, {{0, 1, 3.0}}));
  CHECK(edge.transition == (Matrix(2, 2) << 0, 1, 1, 0).finished());
  CHECK(edge.stationary == (Vector(2) << 0.5, 0.5).finished());
  const WalkModel tri = build_walk(unit_triangle());
  for (Index i = 0; i < 3; ++i) {
    CHECK(tri.stationary(i) == doctest::Approx(1.0 / 3.0));
    for (Index j = 0; j < 3; ++j) CHECK(tri.transition(i, j) == (i == j ? 0.0 : 0.5));
  }
  CHECK_THROWS_AS(build_walk(graph_of(3, {{0, 1, 1}})), Error);
}

TEST_CASE("property: stochastic rows, stationary distribution, spectrum of P") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const SimilarityGraph g = random_graph(rng, pick(rng, 2, 15), 0.3);
    const WalkModel w = build_walk(g);
    CHECK((w.transition.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-12);
    CHECK(w.stationary.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((w.stationary.transpose() * w.transition - w.stationary.transpose()).cwiseAbs().maxCoeff() <= 1e-10);

    Eigen::EigenSolver<Matrix> es(w.transition);
    Vector one_minus = (1.0 - es.eigenvalues().real().array()).matrix();
    std::sort(one_minus.data(), one_minus.data() + one_minus.size());
    const Decomposition rw = laplacian_spectrum(build_laplacian(g, LaplacianKind::RandomWalk));
    CHECK((one_minus - rw.eigenvalues).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("Ncut via transition probabilities") {
  const SimilarityGraph two = graph_of(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK(ncut_via_walk(two, VertexSet(4, std::vector<Index>{0, 1})) == 0.0);
  CHECK(ncut_via_walk(unit_triangle(), VertexSet(3, std::vector<Index>{0})) == doctest::Approx(1.5));
  CHECK_THROWS_AS(ncut_via_walk(unit_triangle(), VertexSet(3)), Error);

  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const SimilarityGraph g = random_graph(rng, pick(rng, 2, 20), 0.3);
    const VertexSet a = random_side(rng, g.size());
    const double walk = ncut_via_walk(g, a);
    const double direct = evaluate_cuts(g, bipartition(a)).ncut;
    CHECK(std::abs(walk - direct) <= 1e-10);
  }
}

TEST_CASE("commute kernel on a single edge") {
  const CommuteKernel k = commute_kernel(graph_of(2, {{0, 1, 1}}));
  CHECK(k.pseudo_inverse.isApprox((Matrix(2, 2) << 0.25, -0.25, -0.25, 0.25).finished(), 1e-14));
  CHECK(commute_distance(k, 0, 1) == doctest::Approx(2.0));
  CHECK(commute_distance(k, 1, 1) == 0.0);
  const Embedding z = commute_embedding(k, k.spectrum);
  CHECK((z.row(0) - z.row(1)).squaredNorm() == doctest::Approx(1.0));
  CHECK(walk_simulate_commute(graph_of(2, {{0, 1, 1}}), 0, 1, 100, 3) == 2.0);
}

TEST_CASE("commute distances on a path and a triangle") {
  const CommuteKernel path = commute_kernel(unit_path(3));
  CHECK(commute_distance(path, 0, 2) == doctest::Approx(8.0).epsilon(1e-12));
  const double mc = walk_simulate_commute(unit_path(3), 0, 2, 100000, 1);
  CHECK(std::abs(mc - 8.0) <= 0.05 * 8.0);

  const CommuteKernel tri = commute_kernel(unit_triangle());
  const double c = commute_distance(tri, 0, 1);
  // effective resistance 2/3 times vol 6
  CHECK(c == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(walk_simulate_commute(unit_triangle(), 0, 1, 100000, 2) - c) <= 0.05 * c);
}

TEST_CASE("pseudo-inverse identities") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const SimilarityGraph g = random_graph(rng, pick(rng, 2, 15), 0.3);
    const CommuteKernel k = commute_kernel(g);
    const Matrix l = build_laplacian(g, LaplacianKind::Unnormalized).dense();
    const Index n = g.size();
    CHECK((k.pseudo_inverse * Vector::Ones(n)).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((l * k.pseudo_inverse * l - l).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK((k.pseudo_inverse - k.pseudo_inverse.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(k.pseudo_inverse);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    // oracle: (L + J/n)^-1 - J/n
    const Matrix j = Matrix::Constant(n, n, 1.0 / static_cast<double>(n));
    const Matrix oracle = (l + j).inverse() - j;
    CHECK((k.pseudo_inverse - oracle).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("property: commute distance is a metric after a square root") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const SimilarityGraph g = random_graph(rng, pick(rng, 3, 12), 0.3);
    const Matrix c = commute_distances(commute_kernel(g));
    const Index n = g.size();
    CHECK((c - c.transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (Index i = 0; i < n; ++i) {
      CHECK(c(i, i) == 0.0);
      for (Index j = 0; j < n; ++j) {
        if (i != j) CHECK(c(i, j) > 0.0);
        for (Index k = 0; k < n; ++k) CHECK(std::sqrt(c(i, k)) <= std::sqrt(c(i, j)) + std::sqrt(c(j, k)) + 1e-10);
      }
    }
  }
}

TEST_CASE("commute embedding reproduces commute distances") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const SimilarityGraph g = random_graph(rng, 10, 0.3);
    const CommuteKernel k = commute_kernel(g);
    const Embedding z = commute_embedding(k, k.spectrum);
    CHECK(z.col(0).cwiseAbs().maxCoeff() == 0.0);
    for (Index i = 0; i < 10; ++i) {
      for (Index j = 0; j < 10; ++j) {
        const double c = commute_distance(k, i, j);
        CHECK(std::abs(k.volume * (z.row(i) - z.row(j)).squaredNorm() - c) <= 1e-8 * std::max(1.0, c));
      }
    }
  }
}

TEST_CASE("connectivity and index errors") {
  const SimilarityGraph two = graph_of(4, {{0, 1, 1}, {2, 3, 1}});
  try {
    commute_kernel(two);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Disconnected);
  }
  CHECK_THROWS_AS(walk_simulate_commute(two, 0, 2, 10, 0), Error);
  const CommuteKernel k = commute_kernel(unit_triangle());
  CHECK_THROWS_AS(commute_distance(k, 0, 3), Error);
  CHECK_THROWS_AS(commute_distance(k, -1, 0), Error);
  CHECK_THROWS_AS(walk_simulate_commute(unit_triangle(), 0, 1, 0, 0), Error);
  Decomposition wrong;
  wrong.eigenvectors = Matrix::Identity(2, 2);
  wrong.eigenvalues = Vector::Ones(2);
  CHECK_THROWS_AS(commute_embedding(k, wrong), Error);
}

TEST_CASE("simulation is deterministic per seed") {
  const SimilarityGraph g = unit_path(5);
  CHECK(walk_simulate_commute(g, 0, 4, 500, 9) == walk_simulate_commute(g, 0, 4, 500, 9));
}
