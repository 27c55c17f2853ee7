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

#include "lncert/figures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lncert/ln_bounds.hpp"

namespace lncert {

namespace {

const Rational kZoom(11, 10);  // window headroom beyond the rightmost/tallest feature

Rational get_param(const FigureSpec& spec, std::string_view name) {
  const Rational* v = find_value(spec.params, name);
  if (v == nullptr) {
    fail(ErrorCode::DomainError,
         std::string(figure_kind_name(spec.kind)) + " needs parameter '" + std::string(name) + "'");
  }
  return *v;
}

void require_interval_params(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || !(a < b)) {
    fail(ErrorCode::DomainError,
         "figure needs 0 < a < b, got a = " + a.to_string() + ", b = " + b.to_string());
  }
}

void set_window(FigureGeometry& g, const Rational& leftmost, const Rational& rightmost) {
  g.x_max = rightmost * kZoom;
  g.y_max = leftmost.reciprocal() * kZoom;
  g.curve_lo = g.y_max.reciprocal();  // where 1/x crosses the window top
  g.curve_hi = g.x_max;
}

void sample_curve(FigureGeometry& g) {
  g.curve.reserve(kCurveSamples);
  Rational span = g.curve_hi - g.curve_lo;
  Rational steps(kCurveSamples - 1);
  for (int i = 0; i < kCurveSamples; ++i) {
    Rational x = g.curve_lo + span * Rational(i) / steps;
    g.curve.emplace_back(x, x.reciprocal());
  }
}

Overlay secant_trapezoid(const Rational& a, const Rational& b) {
  Point top_left{a, a.reciprocal()};
  Point top_right{b, b.reciprocal()};
  return Overlay{OverlayRole::Upper,
                 {{a, Rational(0)}, {b, Rational(0)}, top_right, top_left},
                 top_left,
                 top_right};
}

Overlay tangent_trapezoid(const Rational& a, const Rational& b) {
  // Tangent to 1/x at (a+b)/2: y = 4/(a+b) - 4x/(a+b)^2.
  Rational s = a + b;
  Rational s2 = s * s;
  Point top_left{a, Rational(4) * b / s2};
  Point top_right{b, Rational(4) * a / s2};
  return Overlay{OverlayRole::Lower,
                 {{a, Rational(0)}, {b, Rational(0)}, top_right, top_left},
                 top_left,
                 top_right};
}

Overlay rectangle(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1,
                  OverlayRole role) {
  Point top_left{x0, y1};
  Point top_right{x1, y1};
  return Overlay{role, {{x0, y0}, {x1, y0}, top_right, top_left}, top_left, top_right};
}

void numeric_ticks(FigureGeometry& g, std::initializer_list<Rational> xs) {
  for (const Rational& x : xs) g.x_ticks.emplace_back(x, x.to_string());
}

// Sliver polygons sample at a fixed per-unit count, independent of the
// figure-wide curve resolution.
constexpr int kShadeSamples = 24;

std::vector<Point> curve_points(const Rational& x0, const Rational& x1) {
  std::vector<Point> pts;
  pts.reserve(kShadeSamples + 1);
  Rational span = x1 - x0;
  Rational steps(kShadeSamples);
  for (int i = 0; i <= kShadeSamples; ++i) {
    Rational x = x0 + span * Rational(i) / steps;
    pts.emplace_back(x, x.reciprocal());
  }
  return pts;
}

FigureGeometry geometry_single_bound(const FigureSpec& spec) {
  Rational a = get_param(spec, "a"), b = get_param(spec, "b");
  require_interval_params(a, b);
  FigureGeometry g;
  set_window(g, a, b);
  switch (spec.kind) {
    case FigureKind::BoundTrapezoidUpper:
      g.overlays.push_back(secant_trapezoid(a, b));
      g.caption = "ln(b/a) < (1/2)(1/a + 1/b)(b - a): the secant trapezoid covers the area "
                  "under 1/x on [a, b]";
      break;
    case FigureKind::BoundMidpointLower:
      g.overlays.push_back(tangent_trapezoid(a, b));
      g.caption = "ln(b/a) > 2(b - a)/(a + b): the trapezoid under the midpoint tangent stays "
                  "below 1/x";
      break;
    case FigureKind::BoundChordUpper:
      g.overlays.push_back(rectangle(a, b, Rational(0), a.reciprocal(), OverlayRole::Upper));
      g.caption = "ln(b/a) < (b - a)/a: the rectangle of height 1/a covers the area under 1/x";
      break;
    case FigureKind::BoundChordLower:
      g.overlays.push_back(rectangle(a, b, Rational(0), b.reciprocal(), OverlayRole::Lower));
      g.caption = "ln(b/a) > (b - a)/b: the rectangle of height 1/b fits under 1/x";
      break;
    default:
      fail(ErrorCode::DomainError, "not a single-bound figure");
  }
  numeric_ticks(g, {a, b});
  return g;
}

FigureGeometry geometry_geometric(const FigureSpec& spec) {
  Rational r = get_param(spec, "r");
  Rational m_rat = get_param(spec, "m");
  if (r <= Rational(1)) fail(ErrorCode::DomainError, "geometric figure needs r > 1");
  if (!m_rat.is_integer() || m_rat.sign() < 0) {
    fail(ErrorCode::DomainError, "geometric figure needs integer m >= 0");
  }
  long m = m_rat.num().get_si();

  FigureGeometry g;
  set_window(g, r.reciprocal(), r);

  // Left rectangle [0,1] x [1/r, 1] has area 1 - 1/r; the slabs
  // [1, r] x [1/r^(k+1), 1/r^k] each have area (1/r^k - 1/r^(k+1))(r - 1).
  g.overlays.push_back(rectangle(Rational(0), Rational(1), r.reciprocal(), Rational(1),
                                 OverlayRole::Lower));
  Rational inv_r = r.reciprocal();
  Rational top = inv_r;
  for (long k = 1; k <= m; ++k) {
    Rational bottom = top * inv_r;
    g.overlays.push_back(rectangle(Rational(1), r, bottom, top, OverlayRole::Lower));
    top = bottom;
  }
  g.caption = "equal areas under 1/x from 1 to r and from 1/r to 1 decompose into rectangles "
              "of equal area: 1 + 1/r + 1/r^2 + ... = r/(r - 1)";
  numeric_ticks(g, {r.reciprocal(), Rational(1), r});
  return g;
}

FigureGeometry geometry_power(const FigureSpec& spec) {
  Rational a = get_param(spec, "a"), b = get_param(spec, "b");
  require_interval_params(a, b);
  if (a < Rational(11, 4)) {
    // 11/4 is a certified upper bound for e, so a >= 11/4 guarantees a > e.
    fail(ErrorCode::DomainError, "power figure needs a >= 11/4 so that a > e");
  }
  // Any positive rational scale gives exact geometry; a tight lower bound for
  // ln a keeps the picture faithful to the stretched interval [a ln a, b ln a].
  Rational scale = ln_enclosure(a, Rational(1, 1000)).lo();
  Rational alpha = a * scale, beta = b * scale;

  FigureGeometry g;
  set_window(g, alpha, beta);
  g.overlays.push_back(rectangle(alpha, beta, Rational(0), alpha.reciprocal(),
                                 OverlayRole::Upper));
  g.caption = "the area under 1/x on [a ln a, b ln a] is covered by a rectangle of area "
              "(b/a - 1) ln a, so (ln b)/(ln a) - 1 < b/a - 1 and b^a < a^b";
  g.x_ticks.emplace_back(alpha, "a ln a");
  g.x_ticks.emplace_back(beta, "b ln a");
  return g;
}

FigureGeometry geometry_partition(const FigureSpec& spec) {
  FigureGeometry g;
  if (spec.kind == FigureKind::PartitionLowerE) {
    Partition p({Rational(4), Rational(6), Rational(9), Rational(11)});
    set_window(g, p.first(), p.last());
    const auto& pts = p.points();
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      g.overlays.push_back(tangent_trapezoid(pts[i], pts[i + 1]));
    }
    g.caption = "tangent trapezoids under 1/x over {4, 6, 9, 11} have areas 2/5 + 2/5 + 1/5 = 1, "
                "so ln(11/4) > 1 and e < 11/4";
    numeric_ticks(g, {pts[0], pts[1], pts[2], pts[3]});
  } else {
    Partition p({Rational(10), Rational(12), Rational(15), Rational(18), Rational(21),
                 Rational(24), Rational(27)});
    set_window(g, p.first(), p.last());
    const auto& pts = p.points();
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      g.overlays.push_back(secant_trapezoid(pts[i], pts[i + 1]));
    }
    g.caption = "secant trapezoids over {10, 12, 15, 18, 21, 24, 27} sum below 1, so "
                "ln(27/10) < 1 and e > 27/10";
    for (const Rational& x : pts) g.x_ticks.emplace_back(x, x.to_string());
  }
  return g;
}

FigureGeometry geometry_gamma(const FigureSpec& spec) {
  Rational n_rat = get_param(spec, "n");
  if (!n_rat.is_integer() || n_rat < Rational(2)) {
    fail(ErrorCode::DomainError, "gamma figure needs integer n >= 2");
  }
  long n = n_rat.num().get_si();
  if (n > 64) fail(ErrorCode::DomainError, "gamma figure capped at n = 64");

  FigureGeometry g;
  if (spec.kind == FigureKind::GammaShadedArea) {
    set_window(g, Rational(1), Rational(n));
    for (long k = 1; k < n; ++k) {
      Rational x0(k), x1(k + 1), height(1, k + 1);
      g.overlays.push_back(rectangle(x0, x1, Rational(0), height, OverlayRole::Lower));
      std::vector<Point> sliver = curve_points(x0, x1);
      sliver.emplace_back(x0, height);
      g.shades.push_back(ShadeRegion{std::move(sliver)});
    }
    g.caption = "the slivers between 1/x and the inscribed height-1/(k+1) rectangles on [1, n] "
                "add up to 1 - gamma_n";
  } else {
    set_window(g, Rational(1), Rational(n + 1));
    for (long k = 1; k <= n; ++k) {
      Rational x0(k), x1(k + 1), height(1, k);
      g.overlays.push_back(rectangle(x0, x1, Rational(0), height, OverlayRole::Upper));
      std::vector<Point> sliver;
      sliver.emplace_back(x0, height);
      sliver.emplace_back(x1, height);
      std::vector<Point> arc = curve_points(x0, x1);
      sliver.insert(sliver.end(), arc.rbegin(), arc.rend());
      g.shades.push_back(ShadeRegion{std::move(sliver)});
    }
    g.caption = "the slivers between the covering height-1/k rectangles and 1/x on [1, n+1] "
                "add up to A_n = H_n - ln(n + 1)";
  }
  numeric_ticks(g, {Rational(1), Rational(n)});
  return g;
}

}  // namespace

const char* figure_kind_name(FigureKind k) {
  switch (k) {
    case FigureKind::BoundTrapezoidUpper: return "BoundTrapezoidUpper";
    case FigureKind::BoundMidpointLower: return "BoundMidpointLower";
    case FigureKind::BoundChordUpper: return "BoundChordUpper";
    case FigureKind::BoundChordLower: return "BoundChordLower";
    case FigureKind::GeometricRectangles: return "GeometricRectangles";
    case FigureKind::PowerInequality: return "PowerInequality";
    case FigureKind::PartitionLowerE: return "PartitionLowerE";
    case FigureKind::PartitionUpperE: return "PartitionUpperE";
    case FigureKind::GammaShadedArea: return "GammaShadedArea";
    case FigureKind::GammaShiftedArea: return "GammaShiftedArea";
  }
  return "?";
}

FigureGeometry figure_geometry(const FigureSpec& spec) {
  FigureGeometry g;
  switch (spec.kind) {
    case FigureKind::BoundTrapezoidUpper:
    case FigureKind::BoundMidpointLower:
    case FigureKind::BoundChordUpper:
    case FigureKind::BoundChordLower:
      g = geometry_single_bound(spec);
      break;
    case FigureKind::GeometricRectangles:
      g = geometry_geometric(spec);
      break;
    case FigureKind::PowerInequality:
      g = geometry_power(spec);
      break;
    case FigureKind::PartitionLowerE:
    case FigureKind::PartitionUpperE:
      g = geometry_partition(spec);
      break;
    case FigureKind::GammaShadedArea:
    case FigureKind::GammaShiftedArea:
      g = geometry_gamma(spec);
      break;
  }
  sample_curve(g);
  return g;
}

namespace {

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
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

// Maps math coordinates into the pixel canvas and formats with the fixed
// decimal precision, so identical specs give identical bytes.
class CanvasMap {
 public:
  CanvasMap(const FigureGeometry& g, int width, int height)
      : width_(width),
        height_(height),
        x_scale_(Rational(width - 2 * kCanvasPad) / g.x_max),
        y_scale_(Rational(height - 2 * kCanvasPad) / g.y_max) {}

  std::string px(const Rational& x) const {
    return (Rational(kCanvasPad) + x * x_scale_).to_decimal_string(kDecimalDigits);
  }
  std::string py(const Rational& y) const {
    return (Rational(height_ - kCanvasPad) - y * y_scale_).to_decimal_string(kDecimalDigits);
  }
  std::string point(const Point& p) const { return px(p.first) + "," + py(p.second); }

 private:
  int width_, height_;
  Rational x_scale_, y_scale_;
};

void emit_polygon(std::ostringstream& svg, const CanvasMap& map, const std::vector<Point>& poly,
                  const std::string& klass) {
  svg << "<polygon class=\"" << klass << "\" points=\"";
  for (size_t i = 0; i < poly.size(); ++i) {
    if (i != 0) svg << ' ';
    svg << map.point(poly[i]);
  }
  svg << "\"/>\n";
}

}  // namespace

std::string render(const FigureSpec& spec) {
  const int width = spec.canvas_w;
  const int height = spec.canvas_h;
  if (width <= 2 * kCanvasPad || height <= 2 * kCanvasPad) {
    fail(ErrorCode::DomainError, "canvas too small for the fixed margin");
  }
  FigureGeometry g = figure_geometry(spec);
  CanvasMap map(g, width, height);
  std::ostringstream svg;

  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<title>" << escape_xml(g.caption) << "</title>\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  // Axes through the origin.
  svg << "<g class=\"axes\" stroke=\"#333333\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << map.px(Rational(0)) << "\" y1=\"" << map.py(Rational(0)) << "\" x2=\""
      << map.px(g.x_max) << "\" y2=\"" << map.py(Rational(0)) << "\"/>\n";
  svg << "<line x1=\"" << map.px(Rational(0)) << "\" y1=\"" << map.py(Rational(0)) << "\" x2=\""
      << map.px(Rational(0)) << "\" y2=\"" << map.py(g.y_max) << "\"/>\n";
  svg << "</g>\n";

  svg << "<g class=\"ticks\" stroke=\"#333333\" stroke-width=\"1\" font-size=\"13\" "
         "font-family=\"monospace\">\n";
  for (const auto& [x, label] : g.x_ticks) {
    std::string tx = map.px(x);
    std::string base = map.py(Rational(0));
    svg << "<line x1=\"" << tx << "\" y1=\"" << base << "\" x2=\"" << tx << "\" y2=\""
        << (Rational(height - kCanvasPad + 6)).to_decimal_string(kDecimalDigits)
        << "\"/>\n";
    svg << "<text x=\"" << tx << "\" y=\""
        << (Rational(height - kCanvasPad + 22)).to_decimal_string(kDecimalDigits)
        << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333333\">" << escape_xml(label)
        << "</text>\n";
  }
  svg << "</g>\n";

  if (!g.shades.empty()) {
    svg << "<g class=\"shades\" fill=\"#74a9cf\" fill-opacity=\"0.55\" stroke=\"none\">\n";
    for (const ShadeRegion& s : g.shades) emit_polygon(svg, map, s.polygon, "shade");
    svg << "</g>\n";
  }

  svg << "<g class=\"overlays\" fill=\"#fdbf6f\" fill-opacity=\"0.45\" stroke=\"#e66101\" "
         "stroke-width=\"1.5\">\n";
  for (const Overlay& o : g.overlays) {
    emit_polygon(svg, map, o.polygon,
                 o.role == OverlayRole::Lower ? "overlay lower" : "overlay upper");
  }
  svg << "</g>\n";

  svg << "<polyline class=\"curve\" fill=\"none\" stroke=\"#1b7837\" stroke-width=\"2\" "
         "points=\"";
  for (size_t i = 0; i < g.curve.size(); ++i) {
    if (i != 0) svg << ' ';
    svg << map.point(g.curve[i]);
  }
  svg << "\"/>\n";

  svg << "<text class=\"caption\" x=\"" << width / 2 << "\" y=\"" << (height - 16)
      << "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\" "
         "fill=\"#000000\">"
      << escape_xml(g.caption) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig01", "fig02", "fig05", "fig06",
                                                 "fig09", "fig10", "fig11", "fig12",
                                                 "fig13", "fig14", "fig15"};
  return names;
}

FigureSpec default_figure(std::string_view name) {
  if (name == "fig01") {
    return FigureSpec{FigureKind::BoundTrapezoidUpper, {{"a", Rational(1)}, {"b", Rational(2)}}};
  }
  if (name == "fig02") {
    return FigureSpec{FigureKind::BoundMidpointLower, {{"a", Rational(4)}, {"b", Rational(6)}}};
  }
  if (name == "fig05") {
    return FigureSpec{FigureKind::GeometricRectangles, {{"r", Rational(2)}, {"m", Rational(4)}}};
  }
  if (name == "fig06") {
    return FigureSpec{FigureKind::PowerInequality, {{"a", Rational(3)}, {"b", Rational(4)}}};
  }
  if (name == "fig09") return FigureSpec{FigureKind::PartitionLowerE, {}};
  if (name == "fig10") return FigureSpec{FigureKind::PartitionUpperE, {}};
  if (name == "fig11") return FigureSpec{FigureKind::GammaShadedArea, {{"n", Rational(5)}}};
  if (name == "fig12") return FigureSpec{FigureKind::GammaShiftedArea, {{"n", Rational(5)}}};
  if (name == "fig13") {
    return FigureSpec{FigureKind::BoundChordLower, {{"a", Rational(3)}, {"b", Rational(4)}}};
  }
  if (name == "fig14") {
    return FigureSpec{FigureKind::BoundChordUpper, {{"a", Rational(1)}, {"b", Rational(3, 2)}}};
  }
  if (name == "fig15") {
    return FigureSpec{FigureKind::BoundTrapezoidUpper, {{"a", Rational(2)}, {"b", Rational(3)}}};
  }
  fail(ErrorCode::UsageError, "unknown figure '" + std::string(name) + "'");
}

std::vector<std::string> render_all(const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const std::string& name : figure_names()) {
    std::string text = render(default_figure(name));
    fs::path path = fs::path(out_dir) / (name + ".svg");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::WriteError, "cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) fail(ErrorCode::WriteError, "write failed for " + path.string());
    files.push_back(name + ".svg");
  }
  return files;
}

}  // namespace lncert
