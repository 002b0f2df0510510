#include <doctest.h>

#include <cmath>

#include "pedax/circle.hpp"
#include "pedax/rng.hpp"
#include "t0_oracle.hpp"

using namespace pedax;

TEST_CASE("circumcircle") {
  const Circle c = circumcircle(HPoint(0, 0), HPoint(4, 0), HPoint(0, 3));
  CHECK(point_residual(c.center, HPoint(2, 1.5)) <= 1e-12);
  CHECK(c.r_sq == doctest::Approx(6.25).epsilon(1e-14));

  // Oracle route: perpendicular bisector intersection.
  const t0::P2 o = t0::circumcenter(t0::A, t0::B, t0::C);
  CHECK(std::abs(c.center.ax() - o.x) <= 1e-12);
  CHECK(std::abs(c.center.ay() - o.y) <= 1e-12);

  // Equilateral triangle with centroid at the origin.
  const double h = std::sqrt(3.0);
  const Circle eq = circumcircle(HPoint(1, 0), HPoint(-0.5, h / 2), HPoint(-0.5, -h / 2));
  CHECK(point_residual(eq.center, HPoint(0, 0)) <= 1e-9);

  CHECK_THROWS_AS(circumcircle(HPoint(0, 0), HPoint(1, 0), HPoint(2, 0)), GeomError);
}

TEST_CASE("circumcircle is permutation invariant") {
  CounterRng rng(15, 0);
  for (int i = 0; i < 50; ++i) {
    const Triangle t = sample_triangle(15, i);
    const Circle c1 = circumcircle(t.a(), t.b(), t.c());
    const Circle c2 = circumcircle(t.c(), t.a(), t.b());
    const Circle c3 = circumcircle(t.b(), t.a(), t.c());
    CHECK(point_residual(c1.center, c2.center) <= 1e-10);
    CHECK(point_residual(c1.center, c3.center) <= 1e-10);
    CHECK(std::abs(c1.r_sq - c2.r_sq) <= 1e-9);
    CHECK(std::abs(c1.r_sq - c3.r_sq) <= 1e-9);
  }
  (void)rng;
}

TEST_CASE("power of a point") {
  const Circle c(HPoint(3, 0), 1.0);
  CHECK(power_of_point(HPoint(0, 0), c) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(std::abs(power_of_point(HPoint(4, 0), c)) <= 1e-14);
  CHECK(power_of_point(c.center, c) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK_THROWS_AS(power_of_point(HPoint::direction(1, 0), c), GeomError);
}

TEST_CASE("radical axis") {
  CHECK(line_residual(radical_axis(Circle(HPoint(0, 0), 1), Circle(HPoint(4, 0), 1)),
                      HLine(1, 0, -2)) <= 1e-12);
  // Equating the two power polynomials by hand gives x = 1 here.
  CHECK(line_residual(radical_axis(Circle(HPoint(0, 0), 1), Circle(HPoint(3, 0), 4)),
                      HLine(1, 0, -1)) <= 1e-12);
  CHECK_THROWS_AS(radical_axis(Circle(HPoint(1, 2), 3), Circle(HPoint(1, 2), 3)), GeomError);
  CHECK_THROWS_AS(radical_axis(Circle(HPoint(1, 2), 1), Circle(HPoint(1, 2), 4)), GeomError);
}

TEST_CASE("radical axis properties") {
  CounterRng rng(16, 0);
  int done = 0;
  while (done < 20) {
    const Circle c1(HPoint(rng.uniform(-5, 5), rng.uniform(-5, 5)), rng.uniform(0.2, 9));
    const Circle c2(HPoint(rng.uniform(-5, 5), rng.uniform(-5, 5)), rng.uniform(0.2, 9));
    if (distance(c1.center, c2.center) < 0.5) continue;
    const HLine axis = radical_axis(c1, c2);
    const double scale = 10.0;
    // Every sampled axis point has equal powers.
    const auto dir = unit_direction(axis);
    const HPoint anchor = foot_of_perpendicular(c1.center, axis);
    for (int k = 0; k < 50; ++k) {
      const double s = rng.uniform(-8, 8);
      const HPoint p(anchor.ax() + s * dir[0], anchor.ay() + s * dir[1]);
      CHECK(std::abs(power_of_point(p, c1) - power_of_point(p, c2)) <= 1e-7 * scale * scale);
    }
    CHECK(perpendicular_residual(axis, join(c1.center, c2.center)) <= 1e-9);
    ++done;
  }
}

TEST_CASE("circle to conic") {
  const Conic unit = to_conic(Circle(HPoint(0, 0), 1));
  const Conic expected = Conic::from_coefficients({1, 0, 1, 0, 0, -1});
  CHECK(std::abs(unit.packed()[0] - expected.packed()[0]) <= 1e-14);
  CHECK(std::abs(unit.packed()[5] - expected.packed()[5]) <= 1e-14);

  CounterRng rng(17, 0);
  for (int i = 0; i < 20; ++i) {
    const Circle c(HPoint(rng.uniform(-5, 5), rng.uniform(-5, 5)), rng.uniform(0.1, 9));
    const Conic m = to_conic(c);
    CHECK(point_residual(conic_center(m), c.center) <= 1e-9);
    const double r = std::sqrt(c.r_sq);
    for (int k = 0; k < 100; ++k) {
      const double u = rng.uniform(-4, 4);
      const double d = 1.0 + u * u;
      const HPoint p(c.center.ax() + r * (1 - u * u) / d, c.center.ay() + r * 2 * u / d);
      CHECK(std::abs(power_of_point(p, c)) <= 1e-9);
      CHECK(std::abs(m.quad(p)) <= 1e-9);
    }
  }
}
