#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ffmono::cli {
namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) { return fmt("%.17g", v); }

CsvBuilder::CsvBuilder(const std::vector<std::string>& header)
    : cols_(header.size()) {
  if (header.empty()) throw std::invalid_argument("csv header must be non-empty");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ',';
    out_ += header[i];
  }
  out_ += '\n';
}

void CsvBuilder::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != cols_)
    throw std::invalid_argument("csv row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

void JsonBuilder::add_number(const std::string& key, double v) {
  fields_.emplace_back(key, format_double(v));
}

void JsonBuilder::add_int(const std::string& key, long long v) {
  fields_.emplace_back(key, std::to_string(v));
}

void JsonBuilder::add_bool(const std::string& key, bool v) {
  fields_.emplace_back(key, v ? "true" : "false");
}

void JsonBuilder::add_string(const std::string& key, const std::string& v) {
  fields_.emplace_back(key, "\"" + json_escape(v) + "\"");
}

std::string JsonBuilder::str() const {
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    out += "  \"" + json_escape(fields_[i].first) + "\": " + fields_[i].second;
    if (i + 1 < fields_.size()) out += ',';
    out += '\n';
  }
  out += "}\n";
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

std::string svg_polar_plot(const std::vector<double>& angles,
                           const std::vector<double>& values,
                           const std::string& title) {
  if (angles.size() != values.size() || angles.empty())
    throw std::invalid_argument("polar plot needs matching non-empty series");
  const double cx = 240.0, cy = 240.0, r_in = 40.0, r_out = 200.0;
  double vmin = values[0], vmax = values[0];
  for (double v : values) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  if (!(vmax - vmin > 1e-12)) vmax = vmin + 1.0;
  auto radius = [&](double v) {
    return r_in + (r_out - r_in) * (v - vmin) / (vmax - vmin);
  };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
       "viewBox=\"0 0 480 480\">\n";
  s += "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  for (double r : {r_in, 0.5 * (r_in + r_out), r_out})
    s += "<circle cx=\"240\" cy=\"240\" r=\"" + fmt("%.2f", r) +
         "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  s += "<line x1=\"240\" y1=\"40\" x2=\"240\" y2=\"440\" stroke=\"#eeeeee\"/>\n";
  s += "<line x1=\"40\" y1=\"240\" x2=\"440\" y2=\"240\" stroke=\"#eeeeee\"/>\n";

  std::string pts;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double r = radius(values[i]);
    const double x = cx + r * std::cos(angles[i]);
    const double y = cy - r * std::sin(angles[i]);
    pts += fmt("%.2f", x) + "," + fmt("%.2f", y) + " ";
  }
  s += "<polyline points=\"" + pts +
       "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double r = radius(values[i]);
    const double x = cx + r * std::cos(angles[i]);
    const double y = cy - r * std::sin(angles[i]);
    s += "<circle cx=\"" + fmt("%.2f", x) + "\" cy=\"" + fmt("%.2f", y) +
         "\" r=\"2.5\" fill=\"#d62728\"/>\n";
  }
  s += "<text x=\"12\" y=\"22\" font-family=\"monospace\" font-size=\"14\">" +
       json_escape(title) + "</text>\n";
  s += "<text x=\"12\" y=\"40\" font-family=\"monospace\" font-size=\"11\">"
       "range [" + fmt("%.6g", vmin) + ", " + fmt("%.6g", vmax) + "]</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace ffmono::cli
