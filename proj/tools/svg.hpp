#pragma once

#include <optional>
#include <string>
#include <vector>

namespace speclust::cli {

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<bool> highlight;  // optional per-point emphasis, drawn as diamonds
  bool connect = false;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  Series series;
  std::optional<double> reference_line;  // dashed horizontal line
};

/// Standalone SVG document with axes, tick labels and the data.
std::string render_svg(const Plot& plot);

void save_svg(const std::string& path, const Plot& plot);

}  // namespace speclust::cli
