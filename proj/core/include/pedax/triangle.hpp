#pragma once

#include "pedax/circle.hpp"
#include "pedax/conic.hpp"
#include "pedax/projective.hpp"

namespace pedax {

class Triangle {
 public:
  /// Vertices must be finite and non-collinear (twice-area above
  /// exact_tol * scale^2).
  Triangle(const HPoint& a, const HPoint& b, const HPoint& c, const Tolerance& tol = {});

  const HPoint& a() const { return a_; }
  const HPoint& b() const { return b_; }
  const HPoint& c() const { return c_; }

  Scalar side_a() const;  // |BC|
  Scalar side_b() const;  // |CA|
  Scalar side_c() const;  // |AB|
  Scalar semiperimeter() const;
  Scalar inradius() const;
  Scalar twice_area() const;  // absolute value
  Scalar diameter() const;    // longest side

  HLine line_bc() const;
  HLine line_ca() const;
  HLine line_ab() const;

 private:
  HPoint a_, b_, c_;
};

/// Homogeneous barycentric coordinates (u : v : w), normalized like HPoint.
/// u + v + w = 0 corresponds to a point at infinity.
struct Barycentric {
  Barycentric(Scalar u_, Scalar v_, Scalar w_);
  Scalar u, v, w;
};

enum class CenterKind {
  Incenter,
  Centroid,
  Circumcenter,
  Orthocenter,
  NinePoint,
  Nagel,
  Bevan,
  ExcenterA,
  ExcenterB,
  ExcenterC,
};

Barycentric to_barycentric(const HPoint& p, const Triangle& t, const Tolerance& tol = {});
HPoint from_barycentric(const Barycentric& b, const Triangle& t, const Tolerance& tol = {});

HPoint center(const Triangle& t, CenterKind kind, const Tolerance& tol = {});

struct TouchPoints {
  HPoint a0;  // on BC, |B a0| = s - c
  HPoint b0;  // on CA, |C b0| = s - a
  HPoint c0;  // on AB, |A c0| = s - b
};

/// Touch points of the excircles with the sides; the cevians to them concur
/// at the Nagel point.
TouchPoints excircle_touch_points(const Triangle& t, const Tolerance& tol = {});

/// Perpendicular feet of p on BC, CA, AB. p on the circumcircle makes the
/// feet collinear (DegeneratePedal).
Triangle pedal_triangle(const HPoint& p, const Triangle& t, const Tolerance& tol = {});

struct OffsetPoints {
  HPoint a1, a2, b1, b2, c1, c2;
};

/// The six points at distance x from the pedal vertices along the sidelines:
/// a1, b1, c1 step in the directions B->C, C->A, A->B and a2, b2, c2 in the
/// opposite directions. For feet inside their segments this is exactly
/// "a1, b1, c1 on rays pedal.a->C, pedal.b->A, pedal.c->B and a2, b2, c2 on
/// rays pedal.a->B, pedal.b->C, pedal.c->A"; the direction form extends the
/// construction continuously when a foot leaves its segment. Offsets are
/// unbounded, so the points may leave the closed segments.
OffsetPoints offset_points(const Triangle& pedal, const Triangle& base, Scalar x,
                           const Tolerance& tol = {});

/// Barycentric map (u:v:w) -> (a^2 vw : b^2 wu : c^2 uv). Involutive off the
/// sidelines and the circumcircle; circumcircle points map to infinity.
HPoint isogonal_conjugate(const HPoint& p, const Triangle& t, const Tolerance& tol = {});

/// Circumconic image of a line under isogonal conjugation, fitted through
/// the three vertices and the images of two well-separated sample points.
Conic isogonal_image_of_line(const HLine& l, const Triangle& t, const Tolerance& tol = {});

/// Reflections of p over BC, CA, AB as a triangle.
Triangle reflection_triangle(const HPoint& p, const Triangle& t, const Tolerance& tol = {});

/// Line through the three side-reflections of a circumcircle point; passes
/// through the orthocenter.
HLine steiner_line(const HPoint& p, const Triangle& t, const Tolerance& tol = {});

/// Concurrence point of the perpendiculars from t1's vertices to the
/// opposite-indexed sides of t2, when it exists.
HPoint orthologic_center(const Triangle& t1, const Triangle& t2, const Tolerance& tol = {});

}  // namespace pedax
