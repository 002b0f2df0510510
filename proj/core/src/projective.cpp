#include "pedax/projective.hpp"

#include <algorithm>
#include <cmath>

namespace pedax {

namespace {

std::array<Scalar, 3> normalize_triple(Scalar a, Scalar b, Scalar c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    raise(ErrorCode::NonFinite, "coordinate triple");
  const Scalar n = std::sqrt(a * a + b * b + c * c);
  if (n == 0.0) raise(ErrorCode::ZeroTriple, "coordinate triple");
  a /= n;
  b /= n;
  c /= n;
  const Scalar lead = a != 0.0 ? a : (b != 0.0 ? b : c);
  if (lead < 0.0) {
    a = -a;
    b = -b;
    c = -c;
  }
  // + 0.0 scrubs negative zeros so serialized output is canonical.
  return {a + 0.0, b + 0.0, c + 0.0};
}

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Scalar dot(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Scalar triple_residual(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) {
  Scalar dm = 0.0, dp = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Scalar a = u[i] - v[i];
    const Scalar b = u[i] + v[i];
    dm += a * a;
    dp += b * b;
  }
  return std::sqrt(std::min(dm, dp));
}

}  // namespace

HPoint::HPoint(Scalar x, Scalar y, Scalar w) : c_(normalize_triple(x, y, w)) {}

bool HPoint::is_infinite(const Tolerance& tol) const { return std::abs(c_[2]) <= tol.exact_tol; }

Scalar HPoint::ax(const Tolerance& tol) const {
  if (is_infinite(tol)) raise(ErrorCode::PointAtInfinity, "affine x of an infinite point");
  return c_[0] / c_[2];
}

Scalar HPoint::ay(const Tolerance& tol) const {
  if (is_infinite(tol)) raise(ErrorCode::PointAtInfinity, "affine y of an infinite point");
  return c_[1] / c_[2];
}

HLine::HLine(Scalar l, Scalar m, Scalar n) : c_(normalize_triple(l, m, n)) {}

Scalar HLine::eval(const HPoint& p) const { return dot(c_, p.triple()); }

bool HLine::is_infinity_line(const Tolerance& tol) const {
  return std::abs(c_[0]) <= tol.exact_tol && std::abs(c_[1]) <= tol.exact_tol;
}

HLine join(const HPoint& p, const HPoint& q, const Tolerance& tol) {
  if (point_residual(p, q) <= tol.exact_tol)
    raise(ErrorCode::CoincidentPoints, "join of coincident points");
  const auto c = cross(p.triple(), q.triple());
  return HLine(c[0], c[1], c[2]);
}

HPoint meet(const HLine& l, const HLine& m, const Tolerance& tol) {
  if (line_residual(l, m) <= tol.exact_tol)
    raise(ErrorCode::CoincidentLines, "meet of coincident lines");
  const auto c = cross(l.triple(), m.triple());
  return HPoint(c[0], c[1], c[2]);
}

bool incident(const HPoint& p, const HLine& l, const Tolerance& tol) {
  return std::abs(l.eval(p)) <= tol.abs_tol;
}

Scalar cross_ratio(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& d,
                   const Tolerance& tol) {
  const std::array<const HPoint*, 4> pts = {&a, &b, &c, &d};

  // "No three equal" precondition.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (point_residual(*pts[i], *pts[j]) <= tol.exact_tol &&
            point_residual(*pts[i], *pts[k]) <= tol.exact_tol)
          raise(ErrorCode::DegenerateQuadruple, "three coincident points");

  // Carrier line through the best-separated pair.
  int bi = 0, bj = 1;
  Scalar best = -1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const auto cr = cross(pts[i]->triple(), pts[j]->triple());
      const Scalar n = std::sqrt(dot(cr, cr));
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  if (best <= tol.exact_tol) raise(ErrorCode::DegenerateQuadruple, "all points coincide");
  const HLine carrier = join(*pts[bi], *pts[bj], tol);
  for (const HPoint* p : pts)
    if (std::abs(carrier.eval(*p)) > tol.abs_tol)
      raise(ErrorCode::NotCollinear, "cross_ratio of non-collinear points");

  // Orthonormal basis (U, V) of the carrier's coordinate plane; each point
  // becomes a homogeneous pair (alpha, beta) in that basis.
  const auto U = pts[bi]->triple();
  auto V = cross(carrier.triple(), U);
  const Scalar vn = std::sqrt(dot(V, V));
  for (auto& v : V) v /= vn;
  Scalar alpha[4], beta[4];
  for (int i = 0; i < 4; ++i) {
    alpha[i] = dot(U, pts[i]->triple());
    beta[i] = dot(V, pts[i]->triple());
  }
  auto det2 = [&](int i, int j) { return alpha[i] * beta[j] - alpha[j] * beta[i]; };
  const Scalar num = det2(0, 2) * det2(1, 3);
  const Scalar den = det2(1, 2) * det2(0, 3);
  if (std::abs(den) <= tol.exact_tol)
    raise(ErrorCode::DegenerateQuadruple, "cross-ratio denominator vanishes");
  const Scalar r = num / den;
  if (!std::isfinite(r)) raise(ErrorCode::DegenerateQuadruple, "cross-ratio not finite");
  return r;
}

Scalar distance(const HPoint& p, const HPoint& q, const Tolerance& tol) {
  const Scalar dx = p.ax(tol) - q.ax(tol);
  const Scalar dy = p.ay(tol) - q.ay(tol);
  return std::sqrt(dx * dx + dy * dy);
}

HPoint midpoint(const HPoint& p, const HPoint& q, const Tolerance& tol) {
  return HPoint(0.5 * (p.ax(tol) + q.ax(tol)), 0.5 * (p.ay(tol) + q.ay(tol)));
}

HPoint foot_of_perpendicular(const HPoint& p, const HLine& l, const Tolerance& tol) {
  if (l.is_infinity_line(tol)) raise(ErrorCode::InfiniteLine, "foot on the line at infinity");
  const Scalar px = p.ax(tol), py = p.ay(tol);
  const Scalar a = l.l(), b = l.m(), c = l.n();
  const Scalar t = (a * px + b * py + c) / (a * a + b * b);
  return HPoint(px - t * a, py - t * b);
}

HPoint reflect_over_line(const HPoint& p, const HLine& l, const Tolerance& tol) {
  if (l.is_infinity_line(tol)) raise(ErrorCode::InfiniteLine, "reflection over the line at infinity");
  const Scalar px = p.ax(tol), py = p.ay(tol);
  const Scalar a = l.l(), b = l.m(), c = l.n();
  const Scalar t = 2.0 * (a * px + b * py + c) / (a * a + b * b);
  return HPoint(px - t * a, py - t * b);
}

HLine perpendicular_line_through(const HPoint& p, const HLine& l, const Tolerance& tol) {
  if (l.is_infinity_line(tol))
    raise(ErrorCode::InfiniteLine, "perpendicular to the line at infinity");
  if (p.is_infinite(tol)) raise(ErrorCode::PointAtInfinity, "perpendicular through infinite point");
  const Scalar px = p.ax(tol), py = p.ay(tol);
  // Direction of the result is the normal (l, m) of the input line.
  const Scalar dx = l.l(), dy = l.m();
  return HLine(dy, -dx, dx * py - dy * px);
}

Scalar point_residual(const HPoint& p, const HPoint& q) {
  return triple_residual(p.triple(), q.triple());
}

Scalar line_residual(const HLine& a, const HLine& b) {
  return triple_residual(a.triple(), b.triple());
}

bool same_point(const HPoint& p, const HPoint& q, const Tolerance& tol) {
  return point_residual(p, q) <= tol.exact_tol;
}

bool same_line(const HLine& a, const HLine& b, const Tolerance& tol) {
  return line_residual(a, b) <= tol.exact_tol;
}

Scalar point_line_distance(const HPoint& p, const HLine& l, const Tolerance& tol) {
  if (l.is_infinity_line(tol)) raise(ErrorCode::InfiniteLine, "distance to the line at infinity");
  const Scalar px = p.ax(tol), py = p.ay(tol);
  const Scalar nn = std::sqrt(l.l() * l.l() + l.m() * l.m());
  return std::abs(l.l() * px + l.m() * py + l.n()) / nn;
}

std::array<Scalar, 2> unit_direction(const HLine& l, const Tolerance& tol) {
  if (l.is_infinity_line(tol)) raise(ErrorCode::InfiniteLine, "direction of the line at infinity");
  const Scalar nn = std::sqrt(l.l() * l.l() + l.m() * l.m());
  return {l.m() / nn, -l.l() / nn};
}

Scalar parallel_residual(const HLine& a, const HLine& b, const Tolerance& tol) {
  const auto da = unit_direction(a, tol);
  const auto db = unit_direction(b, tol);
  return std::abs(da[0] * db[1] - da[1] * db[0]);
}

Scalar perpendicular_residual(const HLine& a, const HLine& b, const Tolerance& tol) {
  const auto da = unit_direction(a, tol);
  const auto db = unit_direction(b, tol);
  return std::abs(da[0] * db[0] + da[1] * db[1]);
}

}  // namespace pedax
