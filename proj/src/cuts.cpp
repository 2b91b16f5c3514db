#include "speclust/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace speclust {

CutReport evaluate_cuts(const SimilarityGraph& g, const Partition& p) {
  if (static_cast<Index>(p.size()) != g.size()) {
    throw Error(ErrorKind::Dimension, "partition covers " + std::to_string(p.size()) + " vertices, graph has " +
                                          std::to_string(g.size()));
  }
  const auto k = static_cast<std::size_t>(p.k());
  std::vector<double> boundary(k, 0.0);
  std::vector<double> internal(k, 0.0);
  std::vector<double> volume(k, 0.0);
  const auto sizes = p.cluster_sizes();
  for (Index i = 0; i < g.size(); ++i) {
    const auto ci = static_cast<std::size_t>(p[static_cast<std::size_t>(i)] - 1);
    volume[ci] += g.degree(i);
    for (const Neighbor& nb : g.neighbors(i)) {
      if (p[static_cast<std::size_t>(nb.vertex)] - 1 == static_cast<int>(ci)) {
        internal[ci] += nb.weight;
      } else {
        boundary[ci] += nb.weight;
      }
    }
  }

  CutReport r;
  r.boundary = boundary;
  bool minmax_defined = true;
  double minmax = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    if (!(volume[c] > 0.0)) {
      throw Error(ErrorKind::UndefinedObjective,
                  "cluster " + std::to_string(c + 1) + " has zero volume; Ncut is undefined");
    }
    r.cut += 0.5 * boundary[c];
    r.ratiocut_terms.push_back(boundary[c] / static_cast<double>(sizes[c]));
    r.ncut_terms.push_back(boundary[c] / volume[c]);
    if (internal[c] > 0.0) {
      r.minmaxcut_terms.push_back(boundary[c] / internal[c]);
      minmax += r.minmaxcut_terms.back();
    } else {
      r.minmaxcut_terms.push_back(std::numeric_limits<double>::infinity());
      minmax_defined = false;
    }
    r.ratiocut += r.ratiocut_terms.back();
    r.ncut += r.ncut_terms.back();
  }
  if (minmax_defined) r.minmaxcut = minmax;
  return r;
}

std::string_view to_string(CutObjective objective) {
  switch (objective) {
    case CutObjective::Cut: return "cut";
    case CutObjective::RatioCut: return "ratiocut";
    case CutObjective::NCut: return "ncut";
  }
  return "unknown";
}

CutObjective parse_cut_objective(std::string_view name) {
  if (name == "cut") return CutObjective::Cut;
  if (name == "ratiocut") return CutObjective::RatioCut;
  if (name == "ncut") return CutObjective::NCut;
  throw Error(ErrorKind::InvalidParameter, "unknown cut objective: " + std::string(name));
}

Partition bipartition(const VertexSet& a) {
  std::vector<int> labels(static_cast<std::size_t>(a.universe()));
  for (Index i = 0; i < a.universe(); ++i) labels[static_cast<std::size_t>(i)] = a.contains(i) ? 1 : 2;
  return Partition::from_labels(std::move(labels), 2);
}

namespace {

double objective_value(CutObjective objective, double crossing, double size_a, double size_b, double vol_a,
                       double vol_b) {
  switch (objective) {
    case CutObjective::Cut: return crossing;
    case CutObjective::RatioCut: return crossing / size_a + crossing / size_b;
    case CutObjective::NCut: return crossing / vol_a + crossing / vol_b;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

void require_proper_bipartition(const SimilarityGraph& g, const VertexSet& a) {
  if (a.universe() != g.size()) throw Error(ErrorKind::Dimension, "vertex set and graph sizes differ");
  const Index na = a.count();
  if (na == 0 || na == g.size()) {
    throw Error(ErrorKind::InvalidPartition, "both sides of a bipartition must be nonempty");
  }
}

}  // namespace

double bipartition_objective(const SimilarityGraph& g, const VertexSet& a, CutObjective objective) {
  require_proper_bipartition(g, a);
  const VertexSet b = a.complement();
  const auto ma = set_measures(g, a);
  const auto mb = set_measures(g, b);
  if (objective == CutObjective::NCut && !(ma.volume > 0.0 && mb.volume > 0.0)) {
    throw Error(ErrorKind::UndefinedObjective, "Ncut is undefined for a zero-volume side");
  }
  return objective_value(objective, cut_weight(g, a, b), static_cast<double>(ma.size),
                         static_cast<double>(mb.size), ma.volume, mb.volume);
}

ExactBipartition exact_min_bipartition(const SimilarityGraph& g, CutObjective objective) {
  const Index n = g.size();
  if (n > kMaxExactVertices) {
    throw Error(ErrorKind::InstanceSize, "exact bipartition enumeration supports at most " +
                                             std::to_string(kMaxExactVertices) + " vertices, got " +
                                             std::to_string(n));
  }
  if (n < 2) throw Error(ErrorKind::InvalidInput, "bipartition needs at least two vertices");

  // Vertex 0 stays in A; bit t of the Gray code puts vertex t + 1 in B.
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  const double vol_total = g.degrees().sum();
  double crossing = 0.0;
  double vol_b = 0.0;
  Index size_b = 0;

  const std::uint32_t steps = std::uint32_t{1} << (n - 1);
  std::uint32_t best_mask = 0;
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t mask = 0;

  auto lex_less = [&](std::uint32_t lhs, std::uint32_t rhs) {
    // Compare the sorted member lists of side A (bits clear) for two masks.
    auto in_a = [](std::uint32_t m, Index v) { return ((m >> (v - 1)) & 1u) == 0; };
    auto continues_after = [&](std::uint32_t m, Index v) {
      for (Index u = v + 1; u < n; ++u) {
        if (in_a(m, u)) return true;
      }
      return false;
    };
    for (Index v = 1; v < n; ++v) {
      const bool l = in_a(lhs, v);
      if (l != in_a(rhs, v)) {
        // The list holding v is smaller unless the other one ends here.
        return l ? continues_after(rhs, v) : !continues_after(lhs, v);
      }
    }
    return false;
  };

  for (std::uint32_t s = 1; s < steps; ++s) {
    const int bit = std::countr_zero(s);
    const Index v = bit + 1;
    const bool to_b = in_b[static_cast<std::size_t>(v)] == 0;
    double same = 0.0;
    double other = 0.0;
    for (const Neighbor& nb : g.neighbors(v)) {
      if ((in_b[static_cast<std::size_t>(nb.vertex)] != 0) == !to_b) {
        same += nb.weight;  // neighbor on v's current side
      } else {
        other += nb.weight;
      }
    }
    crossing += same - other;
    in_b[static_cast<std::size_t>(v)] = to_b ? 1 : 0;
    mask ^= std::uint32_t{1} << bit;
    size_b += to_b ? 1 : -1;
    vol_b += to_b ? g.degree(v) : -g.degree(v);

    if (size_b == 0) continue;
    const double vol_a = vol_total - vol_b;
    if (objective == CutObjective::NCut && !(vol_a > 0.0 && vol_b > 0.0)) continue;
    const double value = objective_value(objective, std::max(crossing, 0.0), static_cast<double>(n - size_b),
                                         static_cast<double>(size_b), vol_a, std::max(vol_b, 0.0));
    const bool first = !std::isfinite(best);
    const double tol = first ? 0.0 : 1e-12 * std::max(1.0, std::abs(best));
    if (first || value < best - tol || (std::abs(value - best) <= tol && lex_less(mask, best_mask))) {
      best = value;
      best_mask = mask;
    }
  }
  if (!std::isfinite(best)) {
    throw Error(ErrorKind::UndefinedObjective, "no bipartition has a defined " + std::string(to_string(objective)));
  }

  ExactBipartition out{VertexSet(n), 0.0};
  out.side.insert(0);
  for (Index v = 1; v < n; ++v) {
    if (((best_mask >> (v - 1)) & 1u) == 0) out.side.insert(v);
  }
  out.value = bipartition_objective(g, out.side, objective);
  return out;
}

RelaxationVectors build_relaxation_vector(const SimilarityGraph& g, const VertexSet& a, bool normalized) {
  require_proper_bipartition(g, a);
  const VertexSet b = a.complement();
  const auto ma = set_measures(g, a);
  const auto mb = set_measures(g, b);
  double size_a = static_cast<double>(ma.size);
  double size_b = static_cast<double>(mb.size);
  if (normalized) {
    if (!(ma.volume > 0.0 && mb.volume > 0.0)) {
      throw Error(ErrorKind::InvalidPartition, "volume-normalized indicator needs both volumes positive");
    }
    size_a = ma.volume;
    size_b = mb.volume;
  }
  RelaxationVectors out;
  out.f.resize(g.size());
  out.h = Matrix::Zero(g.size(), 2);
  const double pos = std::sqrt(size_b / size_a);
  const double neg = -std::sqrt(size_a / size_b);
  for (Index i = 0; i < g.size(); ++i) {
    if (a.contains(i)) {
      out.f(i) = pos;
      out.h(i, 0) = 1.0 / std::sqrt(size_a);
    } else {
      out.f(i) = neg;
      out.h(i, 1) = 1.0 / std::sqrt(size_b);
    }
  }
  return out;
}

Matrix indicator_matrix(const SimilarityGraph& g, const Partition& p, bool normalized) {
  if (static_cast<Index>(p.size()) != g.size()) throw Error(ErrorKind::Dimension, "partition and graph sizes differ");
  Vector measure = Vector::Zero(p.k());
  for (Index i = 0; i < g.size(); ++i) {
    measure(p[static_cast<std::size_t>(i)] - 1) += normalized ? g.degree(i) : 1.0;
  }
  for (Index c = 0; c < p.k(); ++c) {
    if (!(measure(c) > 0.0)) {
      throw Error(ErrorKind::InvalidPartition, "cluster " + std::to_string(c + 1) + " has zero volume");
    }
  }
  Matrix h = Matrix::Zero(g.size(), p.k());
  for (Index i = 0; i < g.size(); ++i) {
    const int c = p[static_cast<std::size_t>(i)] - 1;
    h(i, c) = 1.0 / std::sqrt(measure(c));
  }
  return h;
}

GapReport relaxation_gap_report(const SimilarityGraph& g, const SpectralConfig& cfg) {
  if (g.size() > kMaxExactVertices) {
    throw Error(ErrorKind::InstanceSize, "relaxation gap needs at most " + std::to_string(kMaxExactVertices) +
                                             " vertices for the exact side");
  }
  SpectralConfig two = cfg;
  two.k = 2;
  const CutObjective objective =
      cfg.laplacian == LaplacianKind::Unnormalized ? CutObjective::RatioCut : CutObjective::NCut;
  const Partition p = spectral_cluster(g, two);
  const auto side = p.members(1);
  const double spectral = bipartition_objective(g, VertexSet(g.size(), side), objective);
  const double exact = exact_min_bipartition(g, objective).value;

  GapReport r{objective, spectral, exact, 1.0};
  if (exact > 0.0) {
    r.ratio = spectral / exact;
  } else if (spectral > 0.0) {
    r.ratio = std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace speclust
