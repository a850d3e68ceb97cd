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

#ifndef DEPOLSIM_SVG_HPP
#define DEPOLSIM_SVG_HPP

#include <span>
#include <sstream>
#include <string>

#include "depolsim/montecarlo.hpp"

namespace depolsim {

// Minimal hand-rolled SVG canvas: just enough scatter/bar/circle drawing
// for diagnostic figures.
class SvgCanvas {
 public:
  SvgCanvas(double width, double height);

  void line(double x1, double y1, double x2, double y2,
            const std::string& stroke = "#444", double stroke_width = 1.0);
  void circle(double cx, double cy, double r, const std::string& fill,
              const std::string& stroke = "none");
  void rect(double x, double y, double w, double h, const std::string& fill);
  void text(double x, double y, const std::string& content,
            double font_size = 11.0, const std::string& anchor = "start");

  std::string str() const;

 private:
  double width_;
  double height_;
  std::ostringstream body_;
};

// Averaged normalized outputs A and B against p, with the 1-p and p
// reference lines.
std::string svg_splitting_scan(std::span<const SplittingScanRow> rows);

// Two Bloch-sphere cross-sections (xz and xy planes) with one reference
// circle of radius 1-p per swept p and the reconstructed points.
std::string svg_bloch_cross_sections(std::span<const BlochSweepPoint> points);

// Bar chart of Re(chi) over the 16 Pauli-pair labels.
std::string svg_chi_bars(const ChiMatrix& chi);

}  // namespace depolsim

#endif  // DEPOLSIM_SVG_HPP
