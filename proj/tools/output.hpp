#pragma once

// Deterministic text output for the CLI: floats at 17 significant digits,
// CSV and flat JSON builders with fixed field order, atomic file writes,
// and a small self-contained SVG polar plot.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ffmono::cli {

std::string format_double(double v);  // %.17g

class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string>& header);
  void add_row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
  std::size_t cols_;
};

// Single flat JSON object; fields render in insertion order.
class JsonBuilder {
 public:
  void add_number(const std::string& key, double v);
  void add_int(const std::string& key, long long v);
  void add_bool(const std::string& key, bool v);
  void add_string(const std::string& key, const std::string& v);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// Writes via a temporary file in the same directory plus rename, so readers
// never observe a partial file.
void atomic_write(const std::string& path, const std::string& content);

// Polar scatter/polyline of `values` against `angles` (radians); the value
// range is mapped onto the radial band of the plot.
std::string svg_polar_plot(const std::vector<double>& angles,
                           const std::vector<double>& values,
                           const std::string& title);

}  // namespace ffmono::cli
