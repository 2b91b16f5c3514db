#include "svg.hpp"

#include "speclust/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace speclust::cli {

namespace {

constexpr double kWidth = 480.0;
constexpr double kHeight = 320.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 16.0;
constexpr double kTop = 32.0;
constexpr double kBottom = 48.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

Range range_of(const std::vector<double>& v, std::optional<double> extra) {
  double lo = v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
  double hi = v.empty() ? 1.0 : *std::max_element(v.begin(), v.end());
  if (extra) {
    lo = std::min(lo, *extra);
    hi = std::max(hi, *extra);
  }
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string render_svg(const Plot& plot) {
  const Range xr = range_of(plot.series.x, std::nullopt);
  const Range yr = range_of(plot.series.y, plot.reference_line);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - yr.lo) / (yr.hi - yr.lo)) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">"
      << escape(plot.title) << "</text>\n";
  svg << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 4; ++t) {
    const double xv = xr.lo + (xr.hi - xr.lo) * t / 4.0;
    const double yv = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    svg << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(kTop + ph + 14) << "\" text-anchor=\"middle\">"
        << tick(xv) << "</text>\n";
    svg << "<text x=\"" << num(kLeft - 4) << "\" y=\"" << num(sy(yv) + 4) << "\" text-anchor=\"end\">" << tick(yv)
        << "</text>\n";
  }
  svg << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 8) << "\" text-anchor=\"middle\">"
      << escape(plot.x_label) << "</text>\n";
  svg << "<text x=\"14\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << num(kTop + ph / 2) << ")\">" << escape(plot.y_label) << "</text>\n";

  if (plot.reference_line) {
    svg << "<line x1=\"" << num(kLeft) << "\" x2=\"" << num(kLeft + pw) << "\" y1=\"" << num(sy(*plot.reference_line))
        << "\" y2=\"" << num(sy(*plot.reference_line)) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  }

  const auto& s = plot.series;
  if (s.connect && s.x.size() > 1) {
    svg << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) svg << (i ? " " : "") << num(sx(s.x[i])) << ',' << num(sy(s.y[i]));
    svg << "\"/>\n";
  }
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const double cx = sx(s.x[i]);
    const double cy = sy(s.y[i]);
    if (i < s.highlight.size() && s.highlight[i]) {
      svg << "<path d=\"M" << num(cx) << ' ' << num(cy - 4) << " L" << num(cx + 4) << ' ' << num(cy) << " L" << num(cx)
          << ' ' << num(cy + 4) << " L" << num(cx - 4) << ' ' << num(cy) << " Z\" fill=\"firebrick\"/>\n";
    } else {
      svg << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"2.5\" fill=\"steelblue\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void save_svg(const std::string& path, const Plot& plot) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << render_svg(plot);
}

}  // namespace speclust::cli
