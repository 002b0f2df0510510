#pragma once

#include <array>

#include "pedax/errors.hpp"

namespace pedax {

using Scalar = double;

/// Residual thresholds used throughout. abs_tol is the working incidence /
/// metric tolerance, exact_tol the "these are meant to coincide" tolerance,
/// and scale the configuration diameter so that length comparisons can be
/// made dimensionless.
struct Tolerance {
  Scalar abs_tol = 1e-7;
  Scalar exact_tol = 1e-12;
  Scalar scale = 1.0;

  Tolerance with_scale(Scalar s) const { return Tolerance{abs_tol, exact_tol, s}; }
};

/// Projective point (x : y : w), stored as a unit-norm triple with the first
/// nonzero component positive. w = 0 encodes a direction (point at infinity).
class HPoint {
 public:
  HPoint(Scalar x, Scalar y, Scalar w = 1.0);
  static HPoint direction(Scalar dx, Scalar dy) { return HPoint(dx, dy, 0.0); }

  Scalar x() const { return c_[0]; }
  Scalar y() const { return c_[1]; }
  Scalar w() const { return c_[2]; }
  const std::array<Scalar, 3>& triple() const { return c_; }

  bool is_infinite(const Tolerance& tol = {}) const;
  /// Affine coordinates; throws PointAtInfinity when w is (numerically) zero.
  Scalar ax(const Tolerance& tol = {}) const;
  Scalar ay(const Tolerance& tol = {}) const;

 private:
  std::array<Scalar, 3> c_;
};

/// Projective line [l : m : n]; a point is incident iff lx + my + nw = 0.
/// Same normalization as HPoint. (0,0,1) is the line at infinity.
class HLine {
 public:
  HLine(Scalar l, Scalar m, Scalar n);
  static HLine infinity_line() { return HLine(0.0, 0.0, 1.0); }

  Scalar l() const { return c_[0]; }
  Scalar m() const { return c_[1]; }
  Scalar n() const { return c_[2]; }
  const std::array<Scalar, 3>& triple() const { return c_; }

  /// Signed incidence value l*x + m*y + n*w on the normalized triples.
  Scalar eval(const HPoint& p) const;
  bool is_infinity_line(const Tolerance& tol = {}) const;

 private:
  std::array<Scalar, 3> c_;
};

HLine join(const HPoint& p, const HPoint& q, const Tolerance& tol = {});
HPoint meet(const HLine& l, const HLine& m, const Tolerance& tol = {});
bool incident(const HPoint& p, const HLine& l, const Tolerance& tol = {});

/// Cross-ratio (a,b;c,d) of four collinear points, computed from 2x2
/// determinants of the points' coordinates in a shared basis of the carrier
/// line. Points at infinity need no special treatment. -1 means harmonic.
Scalar cross_ratio(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& d,
                   const Tolerance& tol = {});

Scalar distance(const HPoint& p, const HPoint& q, const Tolerance& tol = {});
HPoint midpoint(const HPoint& p, const HPoint& q, const Tolerance& tol = {});
HPoint foot_of_perpendicular(const HPoint& p, const HLine& l, const Tolerance& tol = {});
HPoint reflect_over_line(const HPoint& p, const HLine& l, const Tolerance& tol = {});
HLine perpendicular_line_through(const HPoint& p, const HLine& l, const Tolerance& tol = {});

/// Sign-insensitive distance between normalized coordinate triples
/// (min over the +/- representative), robust when the leading component
/// of one operand sits at zero.
Scalar point_residual(const HPoint& p, const HPoint& q);
Scalar line_residual(const HLine& a, const HLine& b);
bool same_point(const HPoint& p, const HPoint& q, const Tolerance& tol = {});
bool same_line(const HLine& a, const HLine& b, const Tolerance& tol = {});

/// Euclidean distance from a finite point to a finite line.
Scalar point_line_distance(const HPoint& p, const HLine& l, const Tolerance& tol = {});

/// Unit direction vector of a finite line (perpendicular to its normal).
std::array<Scalar, 2> unit_direction(const HLine& l, const Tolerance& tol = {});
/// |cross| of the unit directions: 0 iff parallel.
Scalar parallel_residual(const HLine& a, const HLine& b, const Tolerance& tol = {});
/// |dot| of the unit directions: 0 iff perpendicular.
Scalar perpendicular_residual(const HLine& a, const HLine& b, const Tolerance& tol = {});

}  // namespace pedax
