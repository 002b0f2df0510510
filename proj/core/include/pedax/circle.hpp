#pragma once

#include "pedax/conic.hpp"
#include "pedax/projective.hpp"

namespace pedax {

/// Circle as finite center plus squared radius. Kept separate from Conic so
/// power-of-point arithmetic stays numerically direct; conversion is explicit.
struct Circle {
  Circle(const HPoint& center_, Scalar r_sq_, const Tolerance& tol = {});

  HPoint center;
  Scalar r_sq;
};

Circle circumcircle(const HPoint& a, const HPoint& b, const HPoint& c, const Tolerance& tol = {});

/// |pc|^2 - r^2: zero on the circle, negative inside.
Scalar power_of_point(const HPoint& p, const Circle& c, const Tolerance& tol = {});

/// Locus of equal power w.r.t. two circles; perpendicular to the center line.
/// Concentric (including identical) circles have no radical axis.
HLine radical_axis(const Circle& c1, const Circle& c2, const Tolerance& tol = {});

Conic to_conic(const Circle& c, const Tolerance& tol = {});

}  // namespace pedax
