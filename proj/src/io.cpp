#include "speclust/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace speclust {

std::string format_real(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::optional<double> parse_real(std::string_view token) {
  token = trim(token);
  if (token.empty()) return std::nullopt;
  if (token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void write_points_csv(std::ostream& out, const PointSet& points) {
  for (Index i = 0; i < points.size(); ++i) {
    for (Index j = 0; j < points.dim(); ++j) {
      if (j > 0) out << ',';
      out << format_real(points.points()(i, j));
    }
    out << '\n';
  }
}

void save_points_csv(const std::string& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  write_points_csv(out, points);
}

void write_labels_csv(std::ostream& out, const Partition& p) {
  out << "index,label\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i + 1) << ',' << p[i] << '\n';
}

void save_labels_csv(const std::string& path, const Partition& p) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  write_labels_csv(out, p);
}

Partition read_labels_csv(std::istream& in) {
  std::string line;
  std::vector<int> labels;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (row == 1 && text == "index,label") continue;
    const auto comma = text.find(',');
    const auto index = comma == std::string_view::npos ? std::nullopt : parse_real(text.substr(0, comma));
    const auto label = comma == std::string_view::npos ? std::nullopt : parse_real(text.substr(comma + 1));
    if (!index || !label || *index != static_cast<double>(labels.size() + 1)) {
      throw Error(ErrorKind::Parse, "labels row " + std::to_string(row) + ": expected \"index,label\"");
    }
    labels.push_back(static_cast<int>(*label));
  }
  return Partition::from_labels(std::move(labels));
}

}  // namespace speclust
