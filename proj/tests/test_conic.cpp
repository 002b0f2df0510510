#include <doctest.h>

#include <array>
#include <cmath>

#include "pedax/circle.hpp"
#include "pedax/conic.hpp"
#include "pedax/rng.hpp"

using namespace pedax;

namespace {

// Rational point on a circle, trig-free: u parameterizes the half-angle.
HPoint on_circle(double cx, double cy, double r, double u) {
  const double d = 1.0 + u * u;
  return HPoint(cx + r * (1.0 - u * u) / d, cy + r * 2.0 * u / d);
}

double packed_residual(const Conic& a, const Conic& b) {
  const auto& pa = a.packed();
  const auto& pb = b.packed();
  double dm = 0, dp = 0;
  for (int i = 0; i < 6; ++i) {
    dm += (pa[i] - pb[i]) * (pa[i] - pb[i]);
    dp += (pa[i] + pb[i]) * (pa[i] + pb[i]);
  }
  return std::sqrt(std::min(dm, dp));
}

}  // namespace

TEST_CASE("conic through five points: unit circle") {
  const double s = std::sqrt(0.5);
  const Conic c = conic_through_5(HPoint(1, 0), HPoint(0, 1), HPoint(-1, 0), HPoint(0, -1),
                                  HPoint(s, s));
  const Conic expected = Conic::from_coefficients({1, 0, 1, 0, 0, -1});
  CHECK(packed_residual(c, expected) <= 1e-12);
  CHECK_FALSE(c.is_degenerate());
}

TEST_CASE("conic through five points: parabola") {
  const Conic c = conic_through_5(HPoint(0, 0), HPoint(1, 1), HPoint(-1, 1), HPoint(2, 4),
                                  HPoint(-2, 4));
  // y = x^2 in coefficient form x^2 - yw = 0.
  const Conic expected = Conic::from_coefficients({1, 0, 0, 0, -1, 0});
  CHECK(packed_residual(c, expected) <= 1e-10);
  CHECK_FALSE(c.is_degenerate());
  CHECK(conic_center(c).is_infinite());
  CHECK(point_residual(conic_center(c), HPoint::direction(0, 1)) <= 1e-9);
}

TEST_CASE("conic through five points: degenerate and ill-conditioned input") {
  // Three collinear points force a line pair: flagged, not an error.
  const Conic c = conic_through_5(HPoint(0, 0), HPoint(1, 0), HPoint(2, 0), HPoint(0, 1),
                                  HPoint(1, 1));
  CHECK(c.is_degenerate());
  // Four collinear points leave a pencil of solutions.
  CHECK_THROWS_AS(conic_through_5(HPoint(0, 0), HPoint(1, 0), HPoint(2, 0), HPoint(3, 0),
                                  HPoint(0, 1)),
                  GeomError);
}

TEST_CASE("conic through five points reproduces a random circle") {
  CounterRng rng(11, 0);
  for (int i = 0; i < 20; ++i) {
    const double cx = rng.uniform(-5, 5), cy = rng.uniform(-5, 5), r = rng.uniform(0.5, 4);
    double u[5];
    for (int k = 0; k < 5; ++k) u[k] = rng.uniform(-3, 3);
    // keep the five parameters separated so the fit is well posed
    bool ok = true;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) ok = ok && std::abs(u[a] - u[b]) > 0.1;
    if (!ok) continue;
    const Conic fit = conic_through_5(on_circle(cx, cy, r, u[0]), on_circle(cx, cy, r, u[1]),
                                      on_circle(cx, cy, r, u[2]), on_circle(cx, cy, r, u[3]),
                                      on_circle(cx, cy, r, u[4]));
    const Conic expected = to_conic(Circle(HPoint(cx, cy), r * r));
    CHECK(packed_residual(fit, expected) <= 1e-8);
  }
}

TEST_CASE("polar lines") {
  const Conic circle = Conic::from_coefficients({1, 0, 1, 0, 0, -1});
  CHECK(line_residual(polar_line(HPoint(2, 0), circle), HLine(1, 0, -0.5)) <= 1e-12);
  CHECK(line_residual(polar_line(HPoint(0, 0), circle), HLine::infinity_line()) <= 1e-12);
  // On the conic the polar is the tangent there.
  const HPoint p = HPoint(1, 0);
  const HLine tangent = polar_line(p, circle);
  CHECK(incident(p, tangent));
  CHECK(line_residual(tangent, HLine(1, 0, -1)) <= 1e-12);
}

TEST_CASE("pole of line and roundtrip") {
  const Conic circle = Conic::from_coefficients({1, 0, 1, 0, 0, -1});
  CHECK(point_residual(pole_of_line(HLine(1, 0, -0.5), circle), HPoint(2, 0)) <= 1e-12);
  CHECK(point_residual(pole_of_line(HLine::infinity_line(), circle), HPoint(0, 0)) <= 1e-12);

  CounterRng rng(12, 0);
  const Conic ellipse = Conic::from_coefficients({2, 0.5, 1, -0.25, 0.75, -3});
  for (int i = 0; i < 100; ++i) {
    const HPoint p(rng.uniform(-4, 4), rng.uniform(-4, 4));
    if (std::abs(ellipse.quad(p)) < 1e-4) continue;  // polar of an on-conic point is tangent
    const HLine polar = polar_line(p, ellipse);
    CHECK(point_residual(pole_of_line(polar, ellipse), p) <= 1e-9);
  }
}

TEST_CASE("conjugate points") {
  const Conic circle = Conic::from_coefficients({1, 0, 1, 0, 0, -1});
  CHECK(are_conjugate(HPoint(2, 0), HPoint(0.5, 5), circle));
  CHECK(are_conjugate(HPoint(1, 0), HPoint(1, 0), circle));  // on the conic: self-conjugate
  CHECK_FALSE(are_conjugate(HPoint(0, 0), HPoint(0, 0), circle));

  CounterRng rng(13, 0);
  const Conic ellipse = Conic::from_coefficients({1.5, -0.3, 0.8, 0.2, -0.6, -2});
  for (int i = 0; i < 50; ++i) {
    const HPoint p(rng.uniform(-4, 4), rng.uniform(-4, 4));
    const HPoint q(rng.uniform(-4, 4), rng.uniform(-4, 4));
    CHECK(are_conjugate(p, q, ellipse) == are_conjugate(q, p, ellipse));
  }
}

TEST_CASE("points of the polar are conjugate to the pole") {
  CounterRng rng(14, 0);
  const Conic ellipse = Conic::from_coefficients({1, 0.2, 2, -0.5, 0.3, -4});
  int done = 0;
  while (done < 20) {
    const HPoint p(rng.uniform(-5, 5), rng.uniform(-5, 5));
    if (std::abs(ellipse.quad(p)) < 1e-3) continue;
    const HLine polar = polar_line(p, ellipse);
    const auto dir = unit_direction(polar);
    const HPoint anchor = foot_of_perpendicular(p, polar);
    for (int k = 0; k < 50; ++k) {
      const double s = rng.uniform(-10, 10);
      const HPoint q(anchor.ax() + s * dir[0], anchor.ay() + s * dir[1]);
      CHECK(are_conjugate(p, q, ellipse));
    }
    ++done;
  }
}

TEST_CASE("circle center recovery") {
  const Conic shifted = Conic::from_coefficients({1, 0, 1, -6, 4, 9});  // (x-3)^2 + (y+2)^2 = 4
  CHECK(point_residual(conic_center(shifted), HPoint(3, -2)) <= 1e-12);
}

TEST_CASE("tangent lines from a point") {
  const Conic circle = Conic::from_coefficients({1, 0, 1, 0, 0, -1});
  const auto tangents = tangent_lines_from(HPoint(2, 0), circle);
  REQUIRE(tangents.size() == 2);
  const double ty = std::sqrt(3.0) / 2.0;
  for (const Tangency& t : tangents) {
    CHECK(std::abs(t.touch.ax() - 0.5) <= 1e-9);
    CHECK(std::abs(std::abs(t.touch.ay()) - ty) <= 1e-9);
    CHECK(std::abs(circle.quad(t.touch)) <= 1e-9);          // touch on the conic
    CHECK(incident(t.touch, polar_line(HPoint(2, 0), circle)));  // and on the polar
    CHECK(incident(HPoint(2, 0), t.line));
    CHECK(incident(t.touch, t.line));
  }

  const auto on_conic = tangent_lines_from(HPoint(0, 1), circle);
  REQUIRE(on_conic.size() == 1);
  CHECK(line_residual(on_conic[0].line, HLine(0, 1, -1)) <= 1e-9);

  CHECK_THROWS_AS(tangent_lines_from(HPoint(0, 0), circle), GeomError);
}

TEST_CASE("line conic intersection") {
  const Conic circle = Conic::from_coefficients({1, 0, 1, 0, 0, -1});
  const auto two = meet_line(HLine(0, 1, 0), circle);
  REQUIRE(two.size() == 2);
  for (const HPoint& p : two) {
    CHECK(std::abs(std::abs(p.ax()) - 1.0) <= 1e-12);
    CHECK(std::abs(p.ay()) <= 1e-12);
  }
  const auto tangent = meet_line(HLine(1, 0, -1), circle);
  REQUIRE(tangent.size() == 1);
  CHECK(point_residual(tangent[0], HPoint(1, 0)) <= 1e-9);
  CHECK(meet_line(HLine(1, 0, -2), circle).empty());
}
