#pragma once

#include "speclust/core.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace speclust {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_real(double x);

/// Parses a full token as a finite-or-not double; nullopt on any leftover text.
std::optional<double> parse_real(std::string_view token);

std::string_view trim(std::string_view s);

/// Points CSV: one point per row, comma separated, no header on write.
void write_points_csv(std::ostream& out, const PointSet& points);
void save_points_csv(const std::string& path, const PointSet& points);

/// Partition CSV: header "index,label", 1-based indices and labels.
void write_labels_csv(std::ostream& out, const Partition& p);
void save_labels_csv(const std::string& path, const Partition& p);
Partition read_labels_csv(std::istream& in);

}  // namespace speclust
