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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lncert/figures.hpp"
#include "xml_check.hpp"

using namespace lncert;
namespace fs = std::filesystem;

namespace {

size_t count_needle(const std::string& text, const std::string& needle) {
  size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Every curve-facing edge must sit on the correct side of 1/x at every curve
// sample it spans, checked in exact rationals.
void check_overlay_soundness(const FigureGeometry& g) {
  for (const Overlay& o : g.overlays) {
    const auto& [x0, y0] = o.edge_start;
    const auto& [x1, y1] = o.edge_end;
    REQUIRE(x0 < x1);
    Rational slope = (y1 - y0) / (x1 - x0);
    auto edge_y = [&](const Rational& x) { return y0 + slope * (x - x0); };
    for (const Point& sample : g.curve) {
      const Rational& x = sample.first;
      if (x < x0 || x > x1 || x.sign() <= 0) continue;
      Rational ye = edge_y(x);
      if (o.role == OverlayRole::Lower) {
        CHECK(ye <= sample.second);
      } else {
        CHECK(ye >= sample.second);
      }
    }
  }
}

}  // namespace

TEST_CASE("curve sampling is exact and has the documented size") {
  FigureGeometry g = figure_geometry(default_figure("fig01"));
  REQUIRE(static_cast<int>(g.curve.size()) == kCurveSamples);
  for (const Point& p : g.curve) {
    CHECK(p.second == p.first.reciprocal());
  }
  CHECK(g.curve.front().first == g.curve_lo);
  CHECK(g.curve.back().first == g.curve_hi);
}

TEST_CASE("overlay soundness holds for every published figure") {
  for (const std::string& name : figure_names()) {
    CAPTURE(name);
    check_overlay_soundness(figure_geometry(default_figure(name)));
  }
}

TEST_CASE("overlay counts match the partitions") {
  auto overlays_of = [](const std::string& name) {
    return figure_geometry(default_figure(name)).overlays.size();
  };
  CHECK(overlays_of("fig09") == 3);   // {4, 6, 9, 11}
  CHECK(overlays_of("fig10") == 6);   // {10, 12, 15, 18, 21, 24, 27}
  CHECK(overlays_of("fig05") == 5);   // unit rectangle + m = 4 slabs
  CHECK(overlays_of("fig01") == 1);
  CHECK(overlays_of("fig11") == 4);   // n = 5 inscribed rectangles
  CHECK(overlays_of("fig12") == 5);   // n = 5 covering rectangles

  std::string svg09 = render(default_figure("fig09"));
  CHECK(count_needle(svg09, "class=\"overlay lower\"") == 3);
  std::string svg10 = render(default_figure("fig10"));
  CHECK(count_needle(svg10, "class=\"overlay upper\"") == 6);
}

TEST_CASE("rendering is byte-deterministic") {
  for (const std::string& name : figure_names()) {
    CAPTURE(name);
    CHECK(render(default_figure(name)) == render(default_figure(name)));
  }
}

TEST_CASE("rendered SVG is well-formed XML with a single svg root") {
  for (const std::string& name : figure_names()) {
    CAPTURE(name);
    std::string svg = render(default_figure(name));
    xmlcheck::Result r = xmlcheck::check(svg);
    CAPTURE(r.error);
    CHECK(r.well_formed);
    CHECK(r.root == "svg");
    CHECK(r.elements > 5);
  }
}

TEST_CASE("render_all writes the documented file set deterministically") {
  fs::path dir = fs::temp_directory_path() / "lncert_fig_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  std::vector<std::string> files = render_all(dir.string());
  REQUIRE(files.size() == 11);
  CHECK(files.front() == "fig01.svg");
  CHECK(files.back() == "fig15.svg");

  std::vector<std::string> first_bytes;
  for (const std::string& f : files) first_bytes.push_back(slurp(dir / f));

  std::vector<std::string> again = render_all(dir.string());
  CHECK(again == files);
  for (size_t i = 0; i < files.size(); ++i) {
    CHECK(slurp(dir / files[i]) == first_bytes[i]);
  }
  fs::remove_all(dir);
}

TEST_CASE("render_all surfaces write failures") {
  fs::path blocker = fs::temp_directory_path() / "lncert_fig_blocker";
  std::ofstream(blocker.string()) << "not a directory";
  fs::path bogus = blocker / "sub";
  CHECK_THROWS_AS(render_all(bogus.string()), Error);
  try {
    render_all(bogus.string());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WriteError);
    CHECK(std::string(e.what()).find("fig01.svg") != std::string::npos);
  }
  fs::remove(blocker);
}

TEST_CASE("custom canvas sizes render deterministically") {
  FigureSpec spec = default_figure("fig02");
  spec.canvas_w = 400;
  spec.canvas_h = 300;
  std::string svg = render(spec);
  CHECK(svg == render(spec));
  CHECK(svg != render(default_figure("fig02")));
  xmlcheck::Result r = xmlcheck::check(svg);
  CHECK(r.well_formed);
  CHECK(svg.find("width=\"400\"") != std::string::npos);

  spec.canvas_w = 50;  // smaller than the fixed margin
  CHECK_THROWS_AS(render(spec), Error);
}

TEST_CASE("figure parameter validation") {
  CHECK_THROWS_AS(default_figure("fig03"), Error);
  CHECK_THROWS_AS(default_figure("nope"), Error);

  FigureSpec bad{FigureKind::BoundTrapezoidUpper, {{"a", Rational(2)}, {"b", Rational(1)}}};
  CHECK_THROWS_AS(figure_geometry(bad), Error);

  FigureSpec missing{FigureKind::BoundChordUpper, {{"a", Rational(2)}}};
  CHECK_THROWS_AS(figure_geometry(missing), Error);

  FigureSpec low_power{FigureKind::PowerInequality, {{"a", Rational(2)}, {"b", Rational(3)}}};
  CHECK_THROWS_AS(figure_geometry(low_power), Error);

  FigureSpec bad_r{FigureKind::GeometricRectangles, {{"r", Rational(1)}, {"m", Rational(3)}}};
  CHECK_THROWS_AS(figure_geometry(bad_r), Error);
}
