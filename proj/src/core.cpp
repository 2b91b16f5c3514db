#include "speclust/core.hpp"

#include <algorithm>
#include <cmath>

namespace speclust {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid_parameter";
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::Dimension: return "dimension_mismatch";
    case ErrorKind::IsolatedVertex: return "isolated_vertex";
    case ErrorKind::Disconnected: return "disconnected_graph";
    case ErrorKind::UndefinedObjective: return "undefined_objective";
    case ErrorKind::InvalidPartition: return "invalid_partition";
    case ErrorKind::InstanceSize: return "instance_too_large";
    case ErrorKind::ZeroRow: return "zero_row";
  }
  return "unknown";
}

PointSet::PointSet(Matrix points) : points_(std::move(points)) {
  if (points_.rows() < 1 || points_.cols() < 1) {
    throw Error(ErrorKind::InvalidInput, "point set needs at least one point and one dimension");
  }
  if (!points_.allFinite()) {
    throw Error(ErrorKind::InvalidInput, "point coordinates must be finite");
  }
}

Partition Partition::from_labels(std::vector<int> labels, int k) {
  if (labels.empty()) {
    throw Error(ErrorKind::InvalidPartition, "partition of an empty vertex set");
  }
  const int max_label = *std::max_element(labels.begin(), labels.end());
  if (k == 0) k = max_label;
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(k, 0)) + 1, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > k) {
      throw Error(ErrorKind::InvalidPartition,
                  "label " + std::to_string(labels[i]) + " of vertex " + std::to_string(i + 1) +
                      " outside 1.." + std::to_string(k));
    }
    ++counts[static_cast<std::size_t>(labels[i])];
  }
  for (int c = 1; c <= k; ++c) {
    if (counts[static_cast<std::size_t>(c)] == 0) {
      throw Error(ErrorKind::InvalidPartition, "cluster " + std::to_string(c) + " is empty");
    }
  }
  Partition p;
  p.labels_ = std::move(labels);
  p.k_ = k;
  return p;
}

std::vector<Index> Partition::members(int label) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) out.push_back(static_cast<Index>(i));
  }
  return out;
}

std::vector<std::size_t> Partition::cluster_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k_), 0);
  for (int l : labels_) ++sizes[static_cast<std::size_t>(l - 1)];
  return sizes;
}

Partition Partition::canonical() const {
  std::vector<int> remap(static_cast<std::size_t>(k_) + 1, 0);
  int next = 0;
  std::vector<int> out(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    int& r = remap[static_cast<std::size_t>(labels_[i])];
    if (r == 0) r = ++next;
    out[i] = r;
  }
  Partition p;
  p.labels_ = std::move(out);
  p.k_ = k_;
  return p;
}

bool same_grouping(const Partition& a, const Partition& b) {
  return a.size() == b.size() && a.k() == b.k() && a.canonical() == b.canonical();
}

}  // namespace speclust
