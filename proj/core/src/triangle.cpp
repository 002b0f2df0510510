#include "pedax/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace pedax {

namespace {

Scalar sq(Scalar v) { return v * v; }

HPoint point_along(const HPoint& from, const HPoint& toward, Scalar dist, const Tolerance& tol) {
  const Scalar dx = toward.ax(tol) - from.ax(tol);
  const Scalar dy = toward.ay(tol) - from.ay(tol);
  const Scalar n = std::sqrt(dx * dx + dy * dy);
  if (n <= tol.exact_tol * tol.scale)
    raise(ErrorCode::InvalidPedal, "ray endpoint coincides with its origin");
  return HPoint(from.ax(tol) + dist * dx / n, from.ay(tol) + dist * dy / n);
}

}  // namespace

Triangle::Triangle(const HPoint& a, const HPoint& b, const HPoint& c, const Tolerance& tol)
    : a_(a), b_(b), c_(c) {
  const Scalar ax = a_.ax(tol), ay = a_.ay(tol);
  const Scalar bx = b_.ax(tol), by = b_.ay(tol);
  const Scalar cx = c_.ax(tol), cy = c_.ay(tol);
  const Scalar area2 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  if (std::abs(area2) <= tol.exact_tol * tol.scale * tol.scale)
    raise(ErrorCode::CollinearPoints, "triangle with collinear vertices");
}

Scalar Triangle::side_a() const { return distance(b_, c_); }
Scalar Triangle::side_b() const { return distance(c_, a_); }
Scalar Triangle::side_c() const { return distance(a_, b_); }
Scalar Triangle::semiperimeter() const { return 0.5 * (side_a() + side_b() + side_c()); }
Scalar Triangle::inradius() const { return 0.5 * twice_area() / semiperimeter(); }

Scalar Triangle::twice_area() const {
  const Scalar ax = a_.ax(), ay = a_.ay();
  return std::abs((b_.ax() - ax) * (c_.ay() - ay) - (b_.ay() - ay) * (c_.ax() - ax));
}

Scalar Triangle::diameter() const { return std::max({side_a(), side_b(), side_c()}); }

HLine Triangle::line_bc() const { return join(b_, c_); }
HLine Triangle::line_ca() const { return join(c_, a_); }
HLine Triangle::line_ab() const { return join(a_, b_); }

Barycentric::Barycentric(Scalar u_, Scalar v_, Scalar w_) {
  const HPoint n(u_, v_, w_);  // reuse triple normalization
  u = n.x();
  v = n.y();
  w = n.w();
}

Barycentric to_barycentric(const HPoint& p, const Triangle& t, const Tolerance& tol) {
  // Signed-area coordinates: u = [P B C], v = [P C A], w = [P A B], with the
  // vertices in affine form so that points at infinity (w = 0) work too.
  const auto& pt = p.triple();
  const Scalar ax = t.a().ax(tol), ay = t.a().ay(tol);
  const Scalar bx = t.b().ax(tol), by = t.b().ay(tol);
  const Scalar cx = t.c().ax(tol), cy = t.c().ay(tol);
  auto det3 = [&](Scalar qx, Scalar qy, Scalar rx, Scalar ry) {
    return pt[0] * (qy - ry) - pt[1] * (qx - rx) + pt[2] * (qx * ry - qy * rx);
  };
  const Scalar u = det3(bx, by, cx, cy);
  const Scalar v = det3(cx, cy, ax, ay);
  const Scalar w = det3(ax, ay, bx, by);
  return Barycentric(u, v, w);
}

HPoint from_barycentric(const Barycentric& b, const Triangle& t, const Tolerance& tol) {
  const Scalar x = b.u * t.a().ax(tol) + b.v * t.b().ax(tol) + b.w * t.c().ax(tol);
  const Scalar y = b.u * t.a().ay(tol) + b.v * t.b().ay(tol) + b.w * t.c().ay(tol);
  return HPoint(x, y, b.u + b.v + b.w);
}

HPoint center(const Triangle& t, CenterKind kind, const Tolerance& tol) {
  const Scalar a = t.side_a(), b = t.side_b(), c = t.side_c();
  const Scalar sa = 0.5 * (b * b + c * c - a * a);
  const Scalar sb = 0.5 * (c * c + a * a - b * b);
  const Scalar sc = 0.5 * (a * a + b * b - c * c);
  const Scalar s = t.semiperimeter();
  switch (kind) {
    case CenterKind::Incenter: return from_barycentric(Barycentric(a, b, c), t, tol);
    case CenterKind::Centroid: return from_barycentric(Barycentric(1, 1, 1), t, tol);
    case CenterKind::Circumcenter:
      return from_barycentric(Barycentric(a * a * sa, b * b * sb, c * c * sc), t, tol);
    case CenterKind::Orthocenter:
      return from_barycentric(Barycentric(sb * sc, sc * sa, sa * sb), t, tol);
    case CenterKind::NinePoint:
      return midpoint(center(t, CenterKind::Circumcenter, tol),
                      center(t, CenterKind::Orthocenter, tol), tol);
    case CenterKind::Nagel: return from_barycentric(Barycentric(s - a, s - b, s - c), t, tol);
    case CenterKind::Bevan: {
      // Reflection of the incenter over the circumcenter.
      const HPoint i = center(t, CenterKind::Incenter, tol);
      const HPoint o = center(t, CenterKind::Circumcenter, tol);
      return HPoint(2.0 * o.ax(tol) - i.ax(tol), 2.0 * o.ay(tol) - i.ay(tol));
    }
    case CenterKind::ExcenterA: return from_barycentric(Barycentric(-a, b, c), t, tol);
    case CenterKind::ExcenterB: return from_barycentric(Barycentric(a, -b, c), t, tol);
    case CenterKind::ExcenterC: return from_barycentric(Barycentric(a, b, -c), t, tol);
  }
  raise(ErrorCode::NonFinite, "unknown center kind");
}

TouchPoints excircle_touch_points(const Triangle& t, const Tolerance& tol) {
  const Scalar a = t.side_a(), b = t.side_b(), c = t.side_c();
  const Scalar s = t.semiperimeter();
  return TouchPoints{point_along(t.b(), t.c(), s - c, tol), point_along(t.c(), t.a(), s - a, tol),
                     point_along(t.a(), t.b(), s - b, tol)};
}

Triangle pedal_triangle(const HPoint& p, const Triangle& t, const Tolerance& tol) {
  if (p.is_infinite(tol)) raise(ErrorCode::PointAtInfinity, "pedal triangle of an infinite point");
  const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
  if (std::abs(power_of_point(p, circ, tol)) <= tol.abs_tol * tol.scale * tol.scale)
    raise(ErrorCode::DegeneratePedal, "pedal point on the circumcircle");
  const HPoint fa = foot_of_perpendicular(p, t.line_bc(), tol);
  const HPoint fb = foot_of_perpendicular(p, t.line_ca(), tol);
  const HPoint fc = foot_of_perpendicular(p, t.line_ab(), tol);
  try {
    return Triangle(fa, fb, fc, tol);
  } catch (const GeomError&) {
    raise(ErrorCode::DegeneratePedal, "pedal feet nearly collinear");
  }
}

OffsetPoints offset_points(const Triangle& pedal, const Triangle& base, Scalar x,
                           const Tolerance& tol) {
  if (!(x >= 0.0) || !std::isfinite(x)) raise(ErrorCode::NonFinite, "offset distance");
  const Scalar lim = tol.abs_tol * std::max(tol.scale, 1.0);
  if (point_line_distance(pedal.a(), base.line_bc(), tol) > lim ||
      point_line_distance(pedal.b(), base.line_ca(), tol) > lim ||
      point_line_distance(pedal.c(), base.line_ab(), tol) > lim)
    raise(ErrorCode::InvalidPedal, "pedal vertex off its sideline");
  // The two families step along fixed sideline directions so they always
  // straddle the foot. When a foot lies inside its segment these are
  // exactly the rays toward C, A, B (family 1) and B, C, A (family 2);
  // when a foot leaves the segment the two rays toward the endpoints would
  // coincide and collapse the construction, so the direction form is the
  // continuous extension that keeps the configuration's equidistances.
  auto unit = [&](const HPoint& u, const HPoint& v) -> std::array<Scalar, 2> {
    const Scalar dx = v.ax(tol) - u.ax(tol), dy = v.ay(tol) - u.ay(tol);
    const Scalar n = std::sqrt(dx * dx + dy * dy);
    return {dx / n, dy / n};
  };
  auto at = [&](const HPoint& f, const std::array<Scalar, 2>& d, Scalar s) {
    return HPoint(f.ax(tol) + s * d[0], f.ay(tol) + s * d[1]);
  };
  const auto d_bc = unit(base.b(), base.c());
  const auto d_ca = unit(base.c(), base.a());
  const auto d_ab = unit(base.a(), base.b());
  return OffsetPoints{at(pedal.a(), d_bc, x), at(pedal.a(), d_bc, -x),
                      at(pedal.b(), d_ca, x), at(pedal.b(), d_ca, -x),
                      at(pedal.c(), d_ab, x), at(pedal.c(), d_ab, -x)};
}

HPoint isogonal_conjugate(const HPoint& p, const Triangle& t, const Tolerance& tol) {
  const Barycentric bc = to_barycentric(p, t, tol);
  const Scalar mx = std::max({std::abs(bc.u), std::abs(bc.v), std::abs(bc.w)});
  if (std::abs(bc.u) <= tol.exact_tol * mx || std::abs(bc.v) <= tol.exact_tol * mx ||
      std::abs(bc.w) <= tol.exact_tol * mx)
    raise(ErrorCode::OnSideline, "isogonal conjugate on a sideline");
  const Scalar a = t.side_a(), b = t.side_b(), c = t.side_c();
  return from_barycentric(Barycentric(a * a * bc.v * bc.w, b * b * bc.w * bc.u,
                                      c * c * bc.u * bc.v),
                          t, tol);
}

Conic isogonal_image_of_line(const HLine& l, const Triangle& t, const Tolerance& tol) {
  const Scalar step = t.diameter();
  for (int attempt = 0; attempt < 8; ++attempt) {
    HPoint s1(0, 0), s2(0, 0);
    try {
      if (l.is_infinity_line(tol)) {
        // Directions only; spread the pair rationally across attempts.
        const Scalar u = 0.25 * (attempt + 1);
        s1 = HPoint::direction(1.0 - u * u, 2.0 * u);
        s2 = HPoint::direction(-2.0 * u, 1.0 - u * u);
      } else {
        const HPoint anchor =
            foot_of_perpendicular(center(t, CenterKind::Centroid, tol), l, tol);
        const auto dir = unit_direction(l, tol);
        const Scalar s = (1.0 + attempt) * step;
        s1 = HPoint(anchor.ax(tol) + s * dir[0], anchor.ay(tol) + s * dir[1]);
        s2 = HPoint(anchor.ax(tol) - s * dir[0], anchor.ay(tol) - s * dir[1]);
      }
      const HPoint i1 = isogonal_conjugate(s1, t, tol);
      const HPoint i2 = isogonal_conjugate(s2, t, tol);
      return conic_through_5(t.a(), t.b(), t.c(), i1, i2, tol);
    } catch (const GeomError&) {
      continue;  // sample collided with a sideline or produced a bad fit
    }
  }
  raise(ErrorCode::SampleDegenerate, "no valid sample pair on the line");
}

Triangle reflection_triangle(const HPoint& p, const Triangle& t, const Tolerance& tol) {
  if (p.is_infinite(tol)) raise(ErrorCode::PointAtInfinity, "reflection triangle of infinity");
  const HPoint ra = reflect_over_line(p, t.line_bc(), tol);
  const HPoint rb = reflect_over_line(p, t.line_ca(), tol);
  const HPoint rc = reflect_over_line(p, t.line_ab(), tol);
  try {
    return Triangle(ra, rb, rc, tol);
  } catch (const GeomError&) {
    raise(ErrorCode::DegenerateReflection, "side reflections nearly collinear");
  }
}

HLine steiner_line(const HPoint& p, const Triangle& t, const Tolerance& tol) {
  const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
  if (std::abs(power_of_point(p, circ, tol)) > tol.abs_tol * tol.scale * tol.scale)
    raise(ErrorCode::NotOnCircumcircle, "Steiner line of a non-circumcircle point");
  const HPoint ra = reflect_over_line(p, t.line_bc(), tol);
  const HPoint rb = reflect_over_line(p, t.line_ca(), tol);
  const HPoint rc = reflect_over_line(p, t.line_ab(), tol);
  // Join the best-separated pair for stability; the third is collinear.
  const Scalar dab = sq(ra.ax(tol) - rb.ax(tol)) + sq(ra.ay(tol) - rb.ay(tol));
  const Scalar dbc = sq(rb.ax(tol) - rc.ax(tol)) + sq(rb.ay(tol) - rc.ay(tol));
  const Scalar dca = sq(rc.ax(tol) - ra.ax(tol)) + sq(rc.ay(tol) - ra.ay(tol));
  if (dab >= dbc && dab >= dca) return join(ra, rb, tol);
  if (dbc >= dca) return join(rb, rc, tol);
  return join(rc, ra, tol);
}

HPoint orthologic_center(const Triangle& t1, const Triangle& t2, const Tolerance& tol) {
  const HLine p1 = perpendicular_line_through(t1.a(), t2.line_bc(), tol);
  const HLine p2 = perpendicular_line_through(t1.b(), t2.line_ca(), tol);
  const HLine p3 = perpendicular_line_through(t1.c(), t2.line_ab(), tol);
  HPoint candidate(0, 0);
  try {
    candidate = meet(p1, p2, tol);
  } catch (const GeomError&) {
    raise(ErrorCode::NotOrthologic, "first two perpendiculars coincide");
  }
  const Scalar residual = candidate.is_infinite(tol)
                              ? std::abs(p3.eval(candidate))
                              : point_line_distance(candidate, p3, tol) / std::max(tol.scale, 1e-300);
  if (residual > tol.abs_tol)
    raise(ErrorCode::NotOrthologic, "third perpendicular misses the meet");
  return candidate;
}

}  // namespace pedax
