#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "pedax/checks.hpp"
#include "pedax/json_io.hpp"
#include "pedax/scene.hpp"
#include "pedax/svg.hpp"

using namespace pedax;
using nlohmann::json;

namespace {

const Triangle kT0(HPoint(0, 0), HPoint(4, 0), HPoint(0, 3));

Scene fixture_scene() { return build_scene(kT0, center(kT0, CenterKind::Bevan), 0.5); }

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("scene document structure") {
  const Scene sc = fixture_scene();
  const std::string text = scene_to_json(sc);
  const json doc = json::parse(text);

  REQUIRE(doc.contains("triangle"));
  REQUIRE(doc.contains("P"));
  REQUIRE(doc.contains("x"));
  REQUIRE(doc.contains("points"));
  REQUIRE(doc.contains("circles"));
  REQUIRE(doc.contains("lines"));

  CHECK(doc["x"].get<double>() == 0.5);
  CHECK(doc["triangle"].size() == 3);
  const auto& points = doc["points"];
  for (const char* name : {"A_P", "B_P", "C_P", "A1", "A2", "B1", "B2", "C1", "C2", "A'", "B'",
                           "C'", "H'", "Q", "Q1", "Q2", "O1c", "O2c", "O_P", "I", "O", "N", "G",
                           "Be"})
    CHECK_MESSAGE(points.contains(name), "missing point ", name);

  CHECK(points["H'"][0].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(points["H'"][1].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(points["A_P"][0].get<double>() == doctest::Approx(2.4).epsilon(1e-12));
  CHECK(points["A_P"][1].get<double>() == doctest::Approx(1.2).epsilon(1e-12));

  CHECK(doc["circles"].contains("O1"));
  CHECK(doc["circles"]["O2"].contains("center"));
  CHECK(doc["circles"]["O2"].contains("r_sq"));
  CHECK(doc["lines"].contains("radical_axis"));
  CHECK(doc["lines"]["radical_axis"].size() == 3);

  // Keys come out sorted.
  CHECK(text.find("\"P\"") < text.find("\"circles\""));
  CHECK(text.find("\"circles\"") < text.find("\"lines\""));
  CHECK(text.find("\"lines\"") < text.find("\"points\""));
  CHECK(text.find("\"points\"") < text.find("\"triangle\""));
  CHECK(text.find("\"triangle\"") < text.find("\"x\""));
}

TEST_CASE("scene document roundtrips exactly") {
  const Scene sc = fixture_scene();
  const json doc = json::parse(scene_to_json(sc));
  CHECK(doc["P"][0].get<double>() == sc.p.ax());
  CHECK(doc["P"][1].get<double>() == sc.p.ay());
  CHECK(doc["points"]["Q1"][0].get<double>() == sc.q1.ax());
  CHECK(doc["points"]["Q1"][1].get<double>() == sc.q1.ay());
  CHECK(doc["circles"]["O1"]["r_sq"].get<double>() == sc.o1.r_sq);
  CHECK(doc["circles"]["O1"]["center"][0].get<double>() == sc.o1.center.ax());
  CHECK(doc["lines"]["steiner"][0].get<double>() == sc.steiner_p.l());
  CHECK(doc["lines"]["steiner"][1].get<double>() == sc.steiner_p.m());
  CHECK(doc["lines"]["steiner"][2].get<double>() == sc.steiner_p.n());

  // Emitting the parsed numbers again reproduces the document byte for byte.
  CHECK(scene_to_json(sc) == scene_to_json(sc));
}

TEST_CASE("report document") {
  TrialConfig cfg;
  cfg.trials = 5;
  const CheckReport report = run_check("T2.1", cfg);
  const std::string line = report_to_json_line(report);
  CHECK(line.find('\n') == std::string::npos);
  const json doc = json::parse(line);
  CHECK(doc["id"].get<std::string>() == "T2.1");
  CHECK(doc["trials"].get<int>() == 5);
  CHECK(doc["passed"].get<bool>());
  CHECK(doc["max_residual"].get<double>() == report.max_residual);
  CHECK(doc["tolerance"].get<double>() == report.tolerance);
  CHECK(doc["failures"].is_array());
}

TEST_CASE("svg layer names") {
  CHECK(parse_svg_layer("triangle") == SvgLayer::Triangle);
  CHECK(parse_svg_layer("radical-axis") == SvgLayer::RadicalAxis);
  CHECK(parse_svg_layer("nagel-line") == SvgLayer::NagelLine);
  CHECK_FALSE(parse_svg_layer("bogus").has_value());
}

TEST_CASE("svg element counts for the fixture figure") {
  const Scene sc = fixture_scene();
  const std::string svg =
      render_svg(sc, {SvgLayer::Triangle, SvgLayer::Circles, SvgLayer::RadicalAxis});
  CHECK(count_occurrences(svg, "<circle") == 2);  // the two offset circumcircles
  CHECK(count_occurrences(svg, "<line") == 1);    // the radical axis
  CHECK(count_occurrences(svg, "<path") == 3);    // the triangle sides
  CHECK(svg.find("viewBox=") != std::string::npos);
}

TEST_CASE("svg triangle-only and empty figures") {
  const Scene sc = fixture_scene();
  const std::string triangle_only = render_svg(sc, {SvgLayer::Triangle});
  CHECK(count_occurrences(triangle_only, "<path") == 3);
  CHECK(count_occurrences(triangle_only, "<circle") == 0);
  CHECK(count_occurrences(triangle_only, "<line") == 0);

  const std::string empty = render_svg(sc, {});
  CHECK(empty.find("<g>") != std::string::npos);
  CHECK(count_occurrences(empty, "<path") == 0);
  CHECK(count_occurrences(empty, "<circle") == 0);
  CHECK(count_occurrences(empty, "<line") == 0);
  CHECK(count_occurrences(empty, "<polyline") == 0);
}

TEST_CASE("svg conic layer samples 256 points") {
  const Scene sc = fixture_scene();
  const std::string svg = render_svg(sc, {SvgLayer::Conic});
  const std::size_t start = svg.find("points=\"");
  REQUIRE(start != std::string::npos);
  const std::size_t end = svg.find('"', start + 8);
  const std::string pts = svg.substr(start + 8, end - start - 8);
  CHECK(count_occurrences(pts, ",") == 256);
}

TEST_CASE("svg radical axis renders the Nagel line clipped to the view") {
  const Scene sc = fixture_scene();
  const std::string svg = render_svg(sc, {SvgLayer::Triangle, SvgLayer::RadicalAxis});
  // y = 1 in both endpoints.
  CHECK(svg.find("y1=\"1.000000\"") != std::string::npos);
  CHECK(svg.find("y2=\"1.000000\"") != std::string::npos);
}

TEST_CASE("svg output is byte stable") {
  const Scene sc = fixture_scene();
  const std::vector<SvgLayer> layers = {SvgLayer::Triangle, SvgLayer::Pedal, SvgLayer::Offsets,
                                        SvgLayer::Circles, SvgLayer::RadicalAxis,
                                        SvgLayer::NagelLine, SvgLayer::Conic};
  const std::string once = render_svg(sc, layers);
  const std::string twice = render_svg(build_scene(kT0, center(kT0, CenterKind::Bevan), 0.5),
                                       layers);
  CHECK(once == twice);
}
