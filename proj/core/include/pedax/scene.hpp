#pragma once

#include "pedax/circle.hpp"
#include "pedax/conic.hpp"
#include "pedax/triangle.hpp"

namespace pedax {

/// Everything the offset-circle configuration names for a given
/// (triangle, P, x): the pedal triangle of P, the six offset points at
/// distance x along the side rays, the feet of P on the three internal
/// angle bisectors (a triangle inscribed in the circle with diameter IP,
/// which therefore passes through P), its orthocenter and circumcenter,
/// the three orthologic centers, the two offset circumcircles and their
/// radical axis, the Steiner line of P, the line carrying the orthologic
/// centers, and the circumconic that line maps to under isogonal
/// conjugation.
struct Scene {
  Triangle base;
  HPoint p;
  Scalar x;

  Triangle pedal;            // feet of p on BC, CA, AB
  OffsetPoints offsets;      // A1, A2, B1, B2, C1, C2
  Triangle bisector_pedals;  // feet of p on AI, BI, CI

  HPoint h_prime;  // orthocenter of bisector_pedals
  HPoint o_prime;  // circumcenter of bisector_pedals

  HPoint q;   // orthologic center of pedal w.r.t. bisector_pedals
  HPoint q1;  // same for the A1B1C1 triangle
  HPoint q2;  // same for the A2B2C2 triangle

  Circle o1;  // circumcircle of A1B1C1
  Circle o2;  // circumcircle of A2B2C2
  HPoint o_p;  // circumcenter of the pedal triangle

  HPoint i, o, nagel, centroid, bevan;  // base-triangle centers

  HLine rad_axis;   // radical axis of o1, o2
  HLine steiner_p;  // Steiner line of p w.r.t. bisector_pedals
  HLine q_line;     // line through q1, q, q2
  Conic c_conic;    // isogonal image of q_line w.r.t. bisector_pedals

  Tolerance tol;  // scaled to the configuration diameter
};

/// Feet of p on the three internal angle bisectors. Degenerate exactly when
/// p is the incenter.
Triangle bisector_pedal_triangle(const Triangle& base, const HPoint& p,
                                 const Tolerance& tol = {});

/// Builds the full configuration. Requires finite p off the circumcircle
/// (DegeneratePedal), p != incenter (DegenerateBisectorPedals) and x > 0
/// with distinct offset circumcircles (ConcentricCircles; x = 0 always
/// collapses them).
Scene build_scene(const Triangle& base, const HPoint& p, Scalar x, const Tolerance& tol = {});

/// Largest pairwise distance among the vertices and p (the configuration
/// diameter used to scale residuals).
Scalar configuration_diameter(const Triangle& base, const HPoint* p = nullptr);

}  // namespace pedax
