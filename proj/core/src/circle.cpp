#include "pedax/circle.hpp"

#include <cmath>

namespace pedax {

Circle::Circle(const HPoint& center_, Scalar r_sq_, const Tolerance& tol)
    : center(center_), r_sq(r_sq_) {
  if (center.is_infinite(tol)) raise(ErrorCode::PointAtInfinity, "circle center at infinity");
  if (!std::isfinite(r_sq) || r_sq < 0.0) raise(ErrorCode::NonFinite, "squared radius");
}

Circle circumcircle(const HPoint& a, const HPoint& b, const HPoint& c, const Tolerance& tol) {
  const Scalar ax = a.ax(tol), ay = a.ay(tol);
  const Scalar bx = b.ax(tol), by = b.ay(tol);
  const Scalar cx = c.ax(tol), cy = c.ay(tol);
  const Scalar twice_area = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  if (std::abs(twice_area) <= tol.exact_tol * tol.scale * tol.scale)
    raise(ErrorCode::CollinearPoints, "circumcircle of collinear points");

  const Scalar d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const Scalar na = ax * ax + ay * ay;
  const Scalar nb = bx * bx + by * by;
  const Scalar nc = cx * cx + cy * cy;
  const Scalar ux = (na * (by - cy) + nb * (cy - ay) + nc * (ay - by)) / d;
  const Scalar uy = (na * (cx - bx) + nb * (ax - cx) + nc * (bx - ax)) / d;
  const Scalar r_sq = (ax - ux) * (ax - ux) + (ay - uy) * (ay - uy);
  return Circle(HPoint(ux, uy), r_sq, tol);
}

Scalar power_of_point(const HPoint& p, const Circle& c, const Tolerance& tol) {
  const Scalar dx = p.ax(tol) - c.center.ax(tol);
  const Scalar dy = p.ay(tol) - c.center.ay(tol);
  return dx * dx + dy * dy - c.r_sq;
}

HLine radical_axis(const Circle& c1, const Circle& c2, const Tolerance& tol) {
  const Scalar x1 = c1.center.ax(tol), y1 = c1.center.ay(tol);
  const Scalar x2 = c2.center.ax(tol), y2 = c2.center.ay(tol);
  const Scalar cd = std::sqrt((x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2));
  if (cd <= tol.exact_tol * tol.scale)
    raise(ErrorCode::ConcentricCircles, "radical axis of concentric circles");
  // Difference of the expanded circle equations.
  const Scalar l = 2.0 * (x2 - x1);
  const Scalar m = 2.0 * (y2 - y1);
  const Scalar n = (x1 * x1 + y1 * y1 - c1.r_sq) - (x2 * x2 + y2 * y2 - c2.r_sq);
  return HLine(l, m, n);
}

Conic to_conic(const Circle& c, const Tolerance& tol) {
  const Scalar cx = c.center.ax(tol), cy = c.center.ay(tol);
  return Conic::from_coefficients(
      {1.0, 0.0, 1.0, -2.0 * cx, -2.0 * cy, cx * cx + cy * cy - c.r_sq});
}

}  // namespace pedax
