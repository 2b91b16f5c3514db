#include "speclust/data.hpp"

#include "speclust/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace speclust {

LabeledSample gen_gaussian_mixture_1d(Index n, const std::vector<double>& means, double std,
                                      std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "mixture sample size must be at least 1");
  if (means.empty()) throw Error(ErrorKind::InvalidParameter, "mixture needs at least one mean");
  if (!(std > 0.0) || !std::isfinite(std)) {
    throw Error(ErrorKind::InvalidParameter, "mixture standard deviation must be finite and positive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, means.size() - 1);
  std::normal_distribution<double> normal(0.0, 1.0);

  Matrix x(n, 1);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const std::size_t c = pick(rng);
    x(i, 0) = means[c] + std * normal(rng);
    labels[static_cast<std::size_t>(i)] = static_cast<int>(c) + 1;
  }
  return {PointSet(std::move(x)), std::move(labels)};
}

LabeledSample gen_moons_and_gaussian(std::array<Index, 3> counts, double noise, std::uint64_t seed) {
  for (Index c : counts) {
    if (c < 1) throw Error(ErrorKind::InvalidParameter, "each moons/Gaussian cluster needs at least one point");
  }
  if (!(noise >= 0.0) || !std::isfinite(noise)) {
    throw Error(ErrorKind::InvalidParameter, "noise must be finite and nonnegative");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  const Index n = counts[0] + counts[1] + counts[2];
  Matrix x(n, 2);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));
  Index row = 0;
  auto emit = [&](double px, double py, double spread, int label) {
    // Zero noise must reproduce the template exactly, so skip the draws.
    if (spread > 0.0) {
      px += spread * normal(rng);
      py += spread * normal(rng);
    }
    x(row, 0) = px;
    x(row, 1) = py;
    ++row;
    labels.push_back(label);
  };

  for (int moon = 0; moon < 2; ++moon) {
    const Index m = counts[static_cast<std::size_t>(moon)];
    for (Index t = 0; t < m; ++t) {
      const double theta = std::numbers::pi * (static_cast<double>(t) + 0.5) / static_cast<double>(m);
      if (moon == 0) {
        emit(std::cos(theta), std::sin(theta), noise, 1);
      } else {
        emit(kMoonOffsetX - std::cos(theta), kMoonOffsetY - std::sin(theta), noise, 2);
      }
    }
  }
  for (Index t = 0; t < counts[2]; ++t) emit(kBlobCenterX, kBlobCenterY, kBlobSpread * noise, 3);

  return {PointSet(std::move(x)), std::move(labels)};
}

SimilarityGraph gen_cockroach_graph(Index k) {
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "cockroach graph needs k >= 1");
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < 2 * k; ++i) {
    edges.push_back({i, i + 1, 1.0});
    edges.push_back({2 * k + i, 2 * k + i + 1, 1.0});
  }
  for (Index i = 0; i < k; ++i) edges.push_back({k + i, 3 * k + i, 1.0});
  return SimilarityGraph::from_edges(4 * k, edges);
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

PointSet parse_points_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  std::size_t row = 0;
  std::size_t columns = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++row;
    const auto content = trim(line);
    if (content.empty()) continue;
    const auto cells = split_commas(content);
    std::vector<double> values;
    values.reserve(cells.size());
    bool numeric = true;
    for (auto cell : cells) {
      const auto v = parse_real(cell);
      if (!v) {
        numeric = false;
        break;
      }
      values.push_back(*v);
    }
    if (first_content) {
      first_content = false;
      columns = cells.size();
      if (!numeric) continue;  // header
    }
    if (cells.size() != columns) {
      throw Error(ErrorKind::Parse, "row " + std::to_string(row) + ": expected " + std::to_string(columns) +
                                        " columns, found " + std::to_string(cells.size()));
    }
    if (!numeric) throw Error(ErrorKind::Parse, "row " + std::to_string(row) + ": non-numeric cell");
    for (double v : values) {
      if (!std::isfinite(v)) throw Error(ErrorKind::Parse, "row " + std::to_string(row) + ": non-finite value");
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw Error(ErrorKind::Parse, "row 1: no numeric rows in input");

  Matrix x(static_cast<Index>(rows.size()), static_cast<Index>(columns));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < columns; ++j) {
      x(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    }
  }
  return PointSet(std::move(x));
}

PointSet read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_points_csv(buf.str());
}

}  // namespace speclust
