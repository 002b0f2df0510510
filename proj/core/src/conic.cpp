#include "pedax/conic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace pedax {

namespace {

constexpr Scalar kDegenerateDet = 1e-12;  // on the Frobenius-normalized form

std::array<Scalar, 6> normalize_packed(std::array<Scalar, 6> m) {
  for (Scalar v : m)
    if (!std::isfinite(v)) raise(ErrorCode::NonFinite, "conic coefficients");
  // Frobenius norm of the symmetric matrix; off-diagonal entries count twice.
  const Scalar frob = std::sqrt(m[0] * m[0] + m[3] * m[3] + m[5] * m[5] +
                                2.0 * (m[1] * m[1] + m[2] * m[2] + m[4] * m[4]));
  if (frob == 0.0) raise(ErrorCode::ZeroTriple, "zero conic");
  for (Scalar& v : m) v /= frob;
  Scalar lead = 0.0;
  for (Scalar v : m)
    if (v != 0.0) {
      lead = v;
      break;
    }
  if (lead < 0.0)
    for (Scalar& v : m) v = -v;
  for (Scalar& v : m) v += 0.0;
  return m;
}

Scalar packed_det(const std::array<Scalar, 6>& m) {
  const Scalar a = m[0], b = m[1], c = m[2], d = m[3], e = m[4], f = m[5];
  // det of [[a,b,c],[b,d,e],[c,e,f]]
  return a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c);
}

std::array<Scalar, 3> adjugate_times(const std::array<Scalar, 6>& m,
                                     const std::array<Scalar, 3>& v) {
  const Scalar a = m[0], b = m[1], c = m[2], d = m[3], e = m[4], f = m[5];
  // Adjugate of the symmetric matrix [[a,b,c],[b,d,e],[c,e,f]].
  const Scalar A = d * f - e * e;
  const Scalar B = c * e - b * f;
  const Scalar C = b * e - c * d;
  const Scalar D = a * f - c * c;
  const Scalar E = b * c - a * e;
  const Scalar F = a * d - b * b;
  return {A * v[0] + B * v[1] + C * v[2], B * v[0] + D * v[1] + E * v[2],
          C * v[0] + E * v[1] + F * v[2]};
}

}  // namespace

Conic Conic::from_coefficients(const std::array<Scalar, 6>& k) {
  // (a, b, c, d, e, f) -> symmetric [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]]
  std::array<Scalar, 6> packed = {k[0], 0.5 * k[1], 0.5 * k[3], k[2], 0.5 * k[4], k[5]};
  packed = normalize_packed(packed);
  const Scalar det = packed_det(packed);
  return Conic(packed, det, std::abs(det) < kDegenerateDet);
}

Scalar Conic::quad(const HPoint& p) const { return bilinear(p, p); }

Scalar Conic::bilinear(const HPoint& p, const HPoint& q) const {
  const auto mv = m_times(q);
  const auto& t = p.triple();
  return t[0] * mv[0] + t[1] * mv[1] + t[2] * mv[2];
}

std::array<Scalar, 3> Conic::m_times(const HPoint& p) const {
  const auto& t = p.triple();
  return {m_[0] * t[0] + m_[1] * t[1] + m_[2] * t[2],
          m_[1] * t[0] + m_[3] * t[1] + m_[4] * t[2],
          m_[2] * t[0] + m_[4] * t[1] + m_[5] * t[2]};
}

std::array<Scalar, 9> Conic::matrix() const {
  return {m_[0], m_[1], m_[2], m_[1], m_[3], m_[4], m_[2], m_[4], m_[5]};
}

Conic conic_through_5(const HPoint& p1, const HPoint& p2, const HPoint& p3, const HPoint& p4,
                      const HPoint& p5, const Tolerance& tol) {
  const std::array<const HPoint*, 5> pts = {&p1, &p2, &p3, &p4, &p5};
  Eigen::Matrix<double, 5, 6> A;
  for (int i = 0; i < 5; ++i) {
    const auto& t = pts[i]->triple();
    A(i, 0) = t[0] * t[0];
    A(i, 1) = t[0] * t[1];
    A(i, 2) = t[1] * t[1];
    A(i, 3) = t[0] * t[2];
    A(i, 4) = t[1] * t[2];
    A(i, 5) = t[2] * t[2];
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 5, 6>> svd(A, Eigen::ComputeFullV);
  const Eigen::Matrix<double, 6, 1> sol = svd.matrixV().col(5);
  const double r_null = (A * sol).norm();
  const double r_next = svd.singularValues()(4);
  const double r_max = svd.singularValues()(0);
  // Two near-equal smallest residual directions mean the solution is not
  // unique (e.g. four collinear inputs).
  if (r_next <= 1e-10 * std::max(r_max, 1.0) || r_null / r_next > 0.5)
    raise(ErrorCode::IllConditioned, "five-point conic system has no unique solution");
  (void)tol;
  return Conic::from_coefficients({sol(0), sol(1), sol(2), sol(3), sol(4), sol(5)});
}

HLine polar_line(const HPoint& p, const Conic& c, const Tolerance& tol) {
  if (c.is_degenerate()) raise(ErrorCode::DegenerateConic, "polar w.r.t. a degenerate conic");
  const auto mv = c.m_times(p);
  const Scalar n = std::sqrt(mv[0] * mv[0] + mv[1] * mv[1] + mv[2] * mv[2]);
  if (n <= tol.exact_tol) raise(ErrorCode::CenterOfConic, "M*p vanishes");
  return HLine(mv[0], mv[1], mv[2]);
}

HPoint pole_of_line(const HLine& l, const Conic& c, const Tolerance& tol) {
  if (c.is_degenerate()) raise(ErrorCode::DegenerateConic, "pole w.r.t. a degenerate conic");
  // M^{-1} l up to scale = adj(M) l; no division needed.
  const auto v = adjugate_times(c.packed(), l.triple());
  const Scalar n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (n <= tol.exact_tol) raise(ErrorCode::DegenerateConic, "adjugate annihilates the line");
  return HPoint(v[0], v[1], v[2]);
}

bool are_conjugate(const HPoint& p, const HPoint& q, const Conic& c, const Tolerance& tol) {
  if (c.is_degenerate()) raise(ErrorCode::DegenerateConic, "conjugacy w.r.t. a degenerate conic");
  return std::abs(c.bilinear(p, q)) <= tol.abs_tol;
}

HPoint conic_center(const Conic& c, const Tolerance& tol) {
  return pole_of_line(HLine::infinity_line(), c, tol);
}

std::vector<HPoint> meet_line(const HLine& l, const Conic& c, const Tolerance& tol) {
  if (c.is_degenerate()) raise(ErrorCode::DegenerateConic, "line-conic meet on a degenerate conic");

  // Parameterize the line by two of its points: P(t) = P0 + t*P1.
  HPoint p1 = l.is_infinity_line(tol) ? HPoint::direction(1.0, 0.0)
                                      : HPoint::direction(l.m(), -l.l());
  HPoint p0 = l.is_infinity_line(tol)
                  ? HPoint::direction(0.0, 1.0)
                  : HPoint(-l.l() * l.n(), -l.m() * l.n(), l.l() * l.l() + l.m() * l.m());

  const Scalar qa = c.quad(p1);
  const Scalar qb = c.bilinear(p0, p1);
  const Scalar qc = c.quad(p0);
  auto at = [&](Scalar t) {
    const auto& a = p0.triple();
    const auto& b = p1.triple();
    return HPoint(a[0] + t * b[0], a[1] + t * b[1], a[2] + t * b[2]);
  };

  std::vector<HPoint> out;
  if (std::abs(qa) <= tol.exact_tol) {
    // P1 itself lies on the conic (t = infinity root).
    if (std::abs(qb) <= tol.exact_tol) {
      // Either the whole line is in the conic (excluded: nondegenerate) or
      // the only intersection is P1.
      if (std::abs(qc) > tol.exact_tol) out.push_back(p1);
      return out;
    }
    out.push_back(at(-qc / (2.0 * qb)));
    out.push_back(p1);
    return out;
  }

  const Scalar disc = qb * qb - qa * qc;
  const Scalar thresh = tol.exact_tol * std::max({qb * qb, std::abs(qa * qc), 1e-30});
  if (disc > thresh) {
    const Scalar s = std::sqrt(disc);
    const Scalar q = -(qb + std::copysign(s, qb));
    out.push_back(at(q / qa));
    out.push_back(at(qc / q));
  } else if (disc >= -thresh) {
    out.push_back(at(-qb / qa));  // tangency: double point
  }
  return out;
}

std::vector<Tangency> tangent_lines_from(const HPoint& p, const Conic& c, const Tolerance& tol) {
  if (c.is_degenerate()) raise(ErrorCode::DegenerateConic, "tangents to a degenerate conic");
  if (std::abs(c.quad(p)) <= tol.abs_tol) {
    // p on the conic: the polar is the tangent there.
    return {Tangency{polar_line(p, c, tol), p}};
  }
  const HLine polar = polar_line(p, c, tol);
  const auto touch = meet_line(polar, c, tol);
  if (touch.empty()) raise(ErrorCode::InteriorPoint, "no real tangent from an interior point");
  std::vector<Tangency> out;
  for (const HPoint& t : touch) {
    if (point_residual(p, t) <= tol.exact_tol)
      out.push_back(Tangency{polar, t});
    else
      out.push_back(Tangency{join(p, t, tol), t});
  }
  return out;
}

}  // namespace pedax
