#pragma once

#include <array>
#include <vector>

#include "pedax/projective.hpp"

namespace pedax {

/// Plane conic in symmetric coefficient form: a point p lies on the conic
/// iff p^T M p = 0. M is stored Frobenius-normalized with a deterministic
/// sign (first nonzero packed coefficient positive), so equal conics have
/// equal coefficients.
class Conic {
 public:
  /// Packed coefficients (a, b, c, d, e, f) of
  /// a x^2 + b xy + c y^2 + d xw + e yw + f w^2 = 0.
  static Conic from_coefficients(const std::array<Scalar, 6>& k);

  /// p^T M p on the normalized point triple.
  Scalar quad(const HPoint& p) const;
  /// p^T M q on normalized triples; symmetric.
  Scalar bilinear(const HPoint& p, const HPoint& q) const;
  /// M p as a raw triple (not normalized).
  std::array<Scalar, 3> m_times(const HPoint& p) const;

  bool is_degenerate() const { return degenerate_; }
  Scalar det() const { return det_; }
  /// Packed (m00, m01, m02, m11, m12, m22) of the normalized matrix.
  const std::array<Scalar, 6>& packed() const { return m_; }
  std::array<Scalar, 9> matrix() const;

 private:
  Conic(const std::array<Scalar, 6>& packed, Scalar det, bool degenerate)
      : m_(packed), det_(det), degenerate_(degenerate) {}

  std::array<Scalar, 6> m_;  // m00, m01, m02, m11, m12, m22
  Scalar det_;
  bool degenerate_;
};

/// Conic through five points, via the least-residual direction of the 5x6
/// homogeneous coefficient system. Degenerate conics (three collinear
/// inputs) are returned flagged; an ambiguous system (two near-equal
/// smallest residual directions, e.g. four collinear inputs) raises
/// IllConditioned.
Conic conic_through_5(const HPoint& p1, const HPoint& p2, const HPoint& p3, const HPoint& p4,
                      const HPoint& p5, const Tolerance& tol = {});

HLine polar_line(const HPoint& p, const Conic& c, const Tolerance& tol = {});
HPoint pole_of_line(const HLine& l, const Conic& c, const Tolerance& tol = {});
bool are_conjugate(const HPoint& p, const HPoint& q, const Conic& c, const Tolerance& tol = {});
/// Pole of the line at infinity; at infinity itself for parabolas.
HPoint conic_center(const Conic& c, const Tolerance& tol = {});

struct Tangency {
  HLine line;
  HPoint touch;
};

/// Real tangents from p: two for an exterior point, one when p lies on the
/// conic (the polar itself). InteriorPoint if no real tangent exists.
std::vector<Tangency> tangent_lines_from(const HPoint& p, const Conic& c,
                                         const Tolerance& tol = {});

/// Intersection of a line with a nondegenerate conic: zero, one (tangency,
/// reported as a single double point) or two points.
std::vector<HPoint> meet_line(const HLine& l, const Conic& c, const Tolerance& tol = {});

}  // namespace pedax
