// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace hopest::cli {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

inline std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Minimal line chart: one polyline per series, axis box, min/max labels and
// a legend. Non-finite points are skipped.
inline std::string render_svg(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series) {
  constexpr double width = 640, height = 420, left = 70, right = 150, top = 40,
                   bottom = 50;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Series& s : series)
    for (auto [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x0 == x1) x1 = x0 + 1;
  if (y0 == y1) y1 = y0 + 1;

  const double plot_w = width - left - right, plot_h = height - top - bottom;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * plot_w; };
  auto py = [&](double y) { return top + plot_h - (y - y0) / (y1 - y0) * plot_h; };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return std::string(buf);
  };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf"};
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<text x=\"" + num(width / 2) + "\" y=\"20\" text-anchor=\"middle\">" +
         xml_escape(title) + "</text>\n";
  out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" +
         num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<text x=\"" + num(left) + "\" y=\"" + num(height - 30) + "\">" +
         num(x0) + "</text>\n";
  out += "<text x=\"" + num(left + plot_w) + "\" y=\"" + num(height - 30) +
         "\" text-anchor=\"end\">" + num(x1) + "</text>\n";
  out += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"" +
         num(height - 10) + "\" text-anchor=\"middle\">" + xml_escape(x_label) +
         "</text>\n";
  out += "<text x=\"" + num(left - 5) + "\" y=\"" + num(top + plot_h) +
         "\" text-anchor=\"end\">" + num(y0) + "</text>\n";
  out += "<text x=\"" + num(left - 5) + "\" y=\"" + num(top + 10) +
         "\" text-anchor=\"end\">" + num(y1) + "</text>\n";
  out += "<text x=\"15\" y=\"" + num(top + plot_h / 2) +
         "\" transform=\"rotate(-90 15 " + num(top + plot_h / 2) +
         ")\" text-anchor=\"middle\">" + xml_escape(y_label) + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* colour = palette[i % std::size(palette)];
    std::string pts;
    for (auto [x, y] : series[i].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      pts += num(px(x)) + "," + num(py(y)) + " ";
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    const double ly = top + 15 + 18 * static_cast<double>(i);
    out += "<line x1=\"" + num(width - right + 10) + "\" y1=\"" + num(ly) +
           "\" x2=\"" + num(width - right + 30) + "\" y2=\"" + num(ly) +
           "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(width - right + 35) + "\" y=\"" + num(ly + 4) +
           "\">" + xml_escape(series[i].name) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hopest::cli
