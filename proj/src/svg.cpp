// Copyright 2026 The depolsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "depolsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "depolsim/serialization.hpp"

namespace depolsim {

namespace {

std::string num(double v) { return fmt12(v); }

}  // namespace

SvgCanvas::SvgCanvas(double width, double height)
    : width_(width), height_(height) {}

void SvgCanvas::line(double x1, double y1, double x2, double y2,
                     const std::string& stroke, double stroke_width) {
  body_ << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
        << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << num(stroke_width) << "\"/>\n";
}

void SvgCanvas::circle(double cx, double cy, double r, const std::string& fill,
                       const std::string& stroke) {
  body_ << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\""
        << num(r) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\"/>\n";
}

void SvgCanvas::rect(double x, double y, double w, double h,
                     const std::string& fill) {
  body_ << "  <rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
        << num(w) << "\" height=\"" << num(h) << "\" fill=\"" << fill
        << "\"/>\n";
}

void SvgCanvas::text(double x, double y, const std::string& content,
                     double font_size, const std::string& anchor) {
  body_ << "  <text x=\"" << num(x) << "\" y=\"" << num(y)
        << "\" font-family=\"sans-serif\" font-size=\"" << num(font_size)
        << "\" text-anchor=\"" << anchor << "\">" << content << "</text>\n";
}

std::string SvgCanvas::str() const {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_)
      << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 " << num(width_)
      << " " << num(height_) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

std::string svg_splitting_scan(std::span<const SplittingScanRow> rows) {
  const double w = 480.0;
  const double h = 360.0;
  const double ml = 50.0;
  const double mb = 40.0;
  const double mt = 20.0;
  const double mr = 20.0;
  SvgCanvas svg(w, h);

  const auto sx = [&](double p) { return ml + p * (w - ml - mr); };
  const auto sy = [&](double v) { return h - mb - v * (h - mb - mt); };

  svg.line(sx(0), sy(0), sx(1), sy(0));
  svg.line(sx(0), sy(0), sx(0), sy(1));
  for (int i = 0; i <= 4; ++i) {
    const double v = 0.25 * i;
    svg.text(sx(v), h - mb + 16, fmt12(v), 10, "middle");
    svg.text(ml - 8, sy(v) + 4, fmt12(v), 10, "end");
  }
  svg.text(sx(0.5), h - 6, "p", 12, "middle");

  // reference lines 1-p and p
  svg.line(sx(0), sy(1), sx(1), sy(0), "#bbb");
  svg.line(sx(0), sy(0), sx(1), sy(1), "#bbb");

  for (const SplittingScanRow& row : rows) {
    svg.circle(sx(row.p), sy(row.mean_a), 3.0, "#1f77b4");
    svg.circle(sx(row.p), sy(row.mean_b), 3.0, "#d62728");
  }
  svg.circle(sx(0.05), sy(0.95) - 10, 4, "#1f77b4");
  svg.text(sx(0.05) + 8, sy(0.95) - 6, "A", 11);
  svg.circle(sx(0.05), sy(0.95) + 10, 4, "#d62728");
  svg.text(sx(0.05) + 8, sy(0.95) + 14, "B", 11);
  return svg.str();
}

std::string svg_bloch_cross_sections(
    std::span<const BlochSweepPoint> points) {
  const double panel = 280.0;
  const double w = 2 * panel;
  const double h = panel + 30.0;
  const double radius = 110.0;
  SvgCanvas svg(w, h);

  std::set<double> p_values;
  for (const BlochSweepPoint& point : points) {
    p_values.insert(point.p);
  }

  const double cy = 20.0 + radius;
  const std::array<double, 2> centers = {panel / 2, panel + panel / 2};
  svg.text(centers[0], 14, "xz plane", 12, "middle");
  svg.text(centers[1], 14, "xy plane", 12, "middle");

  for (const double cx : centers) {
    for (const double p : p_values) {
      const double r = (1.0 - p) * radius;
      if (r > 0.5) {
        svg.circle(cx, cy, r, "none", "#ccc");
      }
    }
    svg.line(cx - radius - 8, cy, cx + radius + 8, cy, "#888");
    svg.line(cx, cy - radius - 8, cx, cy + radius + 8, "#888");
  }
  svg.text(centers[0] + radius + 10, cy + 4, "x", 11);
  svg.text(centers[0] + 4, cy - radius - 10, "z", 11);
  svg.text(centers[1] + radius + 10, cy + 4, "x", 11);
  svg.text(centers[1] + 4, cy - radius - 10, "y", 11);

  for (const BlochSweepPoint& point : points) {
    svg.circle(centers[0] + point.bloch.rx * radius,
               cy - point.bloch.rz * radius, 3.0, "#1f77b4");
    svg.circle(centers[1] + point.bloch.rx * radius,
               cy - point.bloch.ry * radius, 3.0, "#d62728");
  }
  return svg.str();
}

std::string svg_chi_bars(const ChiMatrix& chi) {
  const double w = 520.0;
  const double h = 300.0;
  const double ml = 50.0;
  const double mb = 60.0;
  const double mt = 20.0;
  SvgCanvas svg(w, h);

  double max_abs = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      max_abs = std::max(max_abs, std::abs(chi(i, j).real()));
    }
  }
  max_abs = std::max(max_abs, 0.25);

  const double base = h - mb;
  const double bar_w = (w - ml - 20.0) / 16.0;
  const auto sy = [&](double v) { return base - v / max_abs * (base - mt); };

  svg.line(ml, base, w - 10, base);
  svg.text(ml - 8, sy(max_abs) + 4, fmt12(round12(max_abs)), 10, "end");
  svg.line(ml - 4, sy(max_abs), ml, sy(max_abs), "#444");
  svg.text(ml - 8, base + 4, "0", 10, "end");

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int k = 4 * i + j;
      const double v = chi(i, j).real();
      const double x = ml + k * bar_w + 2.0;
      const double top = std::min(sy(v), base);
      svg.rect(x, top, bar_w - 4.0, std::abs(sy(v) - base),
               v >= 0 ? "#1f77b4" : "#d62728");
      const std::string label =
          std::string(ChiMatrix::kBasisLabels[static_cast<std::size_t>(i)]) +
          ChiMatrix::kBasisLabels[static_cast<std::size_t>(j)];
      svg.text(x + bar_w / 2 - 2.0, base + 16, label, 9, "middle");
    }
  }
  return svg.str();
}

}  // namespace depolsim
