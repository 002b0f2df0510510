#include "pedax/scene.hpp"

#include <algorithm>
#include <cmath>

namespace pedax {

Scalar configuration_diameter(const Triangle& base, const HPoint* p) {
  Scalar d = std::max({distance(base.a(), base.b()), distance(base.b(), base.c()),
                       distance(base.c(), base.a())});
  if (p != nullptr && !p->is_infinite()) {
    d = std::max({d, distance(*p, base.a()), distance(*p, base.b()), distance(*p, base.c())});
  }
  return d;
}

Triangle bisector_pedal_triangle(const Triangle& base, const HPoint& p, const Tolerance& tol) {
  if (p.is_infinite(tol)) raise(ErrorCode::PointAtInfinity, "bisector pedals of infinity");
  const HPoint i = center(base, CenterKind::Incenter, tol);
  const HPoint fa = foot_of_perpendicular(p, join(base.a(), i, tol), tol);
  const HPoint fb = foot_of_perpendicular(p, join(base.b(), i, tol), tol);
  const HPoint fc = foot_of_perpendicular(p, join(base.c(), i, tol), tol);
  try {
    return Triangle(fa, fb, fc, tol);
  } catch (const GeomError&) {
    raise(ErrorCode::DegenerateBisectorPedals, "bisector pedals collinear (p at the incenter?)");
  }
}

Scene build_scene(const Triangle& base, const HPoint& p, Scalar x, const Tolerance& tol_in) {
  if (p.is_infinite(tol_in)) raise(ErrorCode::PointAtInfinity, "scene point at infinity");
  if (!std::isfinite(x) || x < 0.0) raise(ErrorCode::NonFinite, "offset distance");
  const Tolerance tol = tol_in.with_scale(configuration_diameter(base, &p));

  Triangle pedal = pedal_triangle(p, base, tol);
  Triangle bp = bisector_pedal_triangle(base, p, tol);
  OffsetPoints offs = offset_points(pedal, base, x, tol);

  Triangle tri1(offs.a1, offs.b1, offs.c1, tol);
  Triangle tri2(offs.a2, offs.b2, offs.c2, tol);
  Circle o1 = circumcircle(tri1.a(), tri1.b(), tri1.c(), tol);
  Circle o2 = circumcircle(tri2.a(), tri2.b(), tri2.c(), tol);
  HLine rad = radical_axis(o1, o2, tol);

  HPoint h_prime = center(bp, CenterKind::Orthocenter, tol);
  HPoint o_prime = center(bp, CenterKind::Circumcenter, tol);

  HPoint q = orthologic_center(pedal, bp, tol);
  HPoint q1 = orthologic_center(tri1, bp, tol);
  HPoint q2 = orthologic_center(tri2, bp, tol);

  HPoint o_p = circumcircle(pedal.a(), pedal.b(), pedal.c(), tol).center;

  HLine steiner_p = steiner_line(p, bp, tol);
  HLine q_line = join(q1, q2, tol);
  Conic c_conic = isogonal_image_of_line(q_line, bp, tol);

  return Scene{base,
               p,
               x,
               pedal,
               offs,
               bp,
               h_prime,
               o_prime,
               q,
               q1,
               q2,
               o1,
               o2,
               o_p,
               center(base, CenterKind::Incenter, tol),
               center(base, CenterKind::Circumcenter, tol),
               center(base, CenterKind::Nagel, tol),
               center(base, CenterKind::Centroid, tol),
               center(base, CenterKind::Bevan, tol),
               rad,
               steiner_p,
               q_line,
               c_conic,
               tol};
}

}  // namespace pedax
