#pragma once

#include "speclust/core.hpp"
#include "speclust/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace speclust {

/// Points with their generating component, labels 1-based.
struct LabeledSample {
  PointSet points;
  std::vector<int> labels;
};

/// 1-D mixture: component chosen uniformly, then x ~ N(mean, std^2).
LabeledSample gen_gaussian_mixture_1d(Index n, const std::vector<double>& means, double std,
                                      std::uint64_t seed);

/// Two interleaved unit half-circles and an isotropic Gaussian blob in the
/// plane. Counts are (top moon, bottom moon, blob); the moons' points sit on
/// evenly spaced template angles perturbed by N(0, noise^2), the blob has
/// standard deviation 10 * noise around its center.
LabeledSample gen_moons_and_gaussian(std::array<Index, 3> counts, double noise, std::uint64_t seed);

/// Template geometry of the moons-and-Gaussian generator.
inline constexpr double kMoonOffsetX = 1.0;
inline constexpr double kMoonOffsetY = 0.5;
inline constexpr double kBlobCenterX = 4.0;
inline constexpr double kBlobCenterY = 0.25;
inline constexpr double kBlobSpread = 10.0;

/// Ladder on 4k vertices: paths 0..2k-1 and 2k..4k-1 with unit rungs
/// joining k+i and 3k+i for i < k. Left halves hang free.
SimilarityGraph gen_cockroach_graph(Index k);

/// Comma-separated numeric rows; a non-numeric first row is a header.
PointSet read_points_csv(const std::string& path);
PointSet parse_points_csv(const std::string& text);

}  // namespace speclust
