// Copyright 2026 The lncert Authors
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

#ifndef LNCERT_FIGURES_HPP
#define LNCERT_FIGURES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lncert/certificates.hpp"
#include "lncert/rational.hpp"

namespace lncert {

enum class FigureKind {
  BoundTrapezoidUpper,   // secant trapezoid covering the area under 1/x
  BoundMidpointLower,    // tangent trapezoid under the curve
  BoundChordUpper,       // covering rectangle of height 1/a
  BoundChordLower,       // inscribed rectangle of height 1/b
  GeometricRectangles,   // equal-area rectangle decomposition of the series
  PowerInequality,       // covering rectangle on the stretched interval [a ln a, b ln a]
  PartitionLowerE,       // three tangent trapezoids over {4, 6, 9, 11}
  PartitionUpperE,       // six secant trapezoids over {10, 12, ..., 27}
  GammaShadedArea,       // slivers between 1/x and inscribed unit-step rectangles
  GammaShiftedArea,      // slivers between covering unit-step rectangles and 1/x
};

const char* figure_kind_name(FigureKind k);

inline constexpr int kCanvasWidth = 840;
inline constexpr int kCanvasHeight = 560;

struct FigureSpec {
  FigureKind kind;
  NamedValues params;  // must satisfy the preconditions of the matching operation
  int canvas_w = kCanvasWidth;
  int canvas_h = kCanvasHeight;
};

enum class OverlayRole { Lower, Upper };

using Point = std::pair<Rational, Rational>;

// One bound polygon. The polygon is what gets drawn; edge_start/edge_end span
// the straight curve-facing edge, which is what the soundness checks sample.
struct Overlay {
  OverlayRole role;
  std::vector<Point> polygon;
  Point edge_start, edge_end;
};

// Shaded region between curve samples and a horizontal line; decorative, not
// a bound, so it is excluded from the overlay soundness contract.
struct ShadeRegion {
  std::vector<Point> polygon;
};

// All geometry in exact rationals, before any decimal formatting. Window is
// [0, x_max] x [0, y_max]; the curve y = 1/x is sampled at kCurveSamples
// points uniformly in x over [curve_lo, curve_hi].
struct FigureGeometry {
  Rational x_max, y_max;
  Rational curve_lo, curve_hi;
  std::vector<Point> curve;
  std::vector<Overlay> overlays;
  std::vector<ShadeRegion> shades;
  std::vector<std::pair<Rational, std::string>> x_ticks;
  std::string caption;
};

inline constexpr int kCurveSamples = 256;  // fixed, documented rendering constant
inline constexpr int kDecimalDigits = 6;   // round-half-even decimal places
inline constexpr int kCanvasPad = 60;

FigureGeometry figure_geometry(const FigureSpec& spec);

// Well-formed SVG 1.1 text; byte-identical for identical specs.
std::string render(const FigureSpec& spec);

// The published figure set, in emission order: fig01, fig02, fig05, fig06,
// fig09, fig10, fig11, fig12, fig13, fig14, fig15. Gaps are figures whose
// geometry duplicates one of these up to relabeling.
const std::vector<std::string>& figure_names();

// Default parameterization of a published figure ("fig09" etc).
FigureSpec default_figure(std::string_view name);

// Writes <name>.svg for every published figure into out_dir and returns the
// file names in emission order. I/O failure raises WriteError with the path.
std::vector<std::string> render_all(const std::string& out_dir);

}  // namespace lncert

#endif  // LNCERT_FIGURES_HPP
