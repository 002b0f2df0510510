#include "pedax/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pedax {

namespace {

constexpr Scalar kMargin = 1e-3;  // relative rejection margin for near-degenerate samples

struct SkipTrial {};

std::uint64_t trial_stream(const char* id, int trial, int sub = 0) {
  return fnv1a64(id) + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(trial) * 8u + sub + 1u);
}

class Recorder {
 public:
  Recorder(const char* id, const TrialConfig& cfg, Scalar tol_factor)
      : id_(id), trials_(cfg.trials), tol_(cfg.tol.abs_tol * tol_factor) {}

  void observe(int trial, const char* what, Scalar residual) {
    if (!std::isfinite(residual)) {
      failures_.push_back({trial, 1.0, std::string(what) + " (non-finite residual)"});
      max_ = std::max(max_, 1.0);
      return;
    }
    max_ = std::max(max_, residual);
    if (residual > tol_) failures_.push_back({trial, residual, what});
  }

  void fail(int trial, const std::string& what) {
    failures_.push_back({trial, 1.0, what});
    max_ = std::max(max_, 1.0);
  }

  void count_effective() { ++effective_; }

  CheckReport finish() {
    if (effective_ == 0) fail(-1, "all trials skipped");
    std::stable_sort(failures_.begin(), failures_.end(),
                     [](const Failure& a, const Failure& b) { return a.index < b.index; });
    return CheckReport{id_, trials_, max_, tol_, failures_.empty(), std::move(failures_)};
  }

 private:
  std::string id_;
  int trials_;
  Scalar tol_;
  Scalar max_ = 0.0;
  int effective_ = 0;
  std::vector<Failure> failures_;
};

// Runs per_trial for every trial index, converting SkipTrial into a silent
// skip and unexpected geometry errors into recorded failures.
template <typename Fn>
CheckReport run_trials(const char* id, const TrialConfig& cfg, Scalar tol_factor, Fn per_trial) {
  Recorder rec(id, cfg, tol_factor);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    try {
      per_trial(trial, rec);
      rec.count_effective();
    } catch (const SkipTrial&) {
    } catch (const GeomError& e) {
      rec.fail(trial, std::string("unexpected error: ") + e.what());
    }
  }
  return rec.finish();
}

HPoint affine(Scalar x, Scalar y) { return HPoint(x, y); }

HPoint lerp(const HPoint& a, const HPoint& b, Scalar t) {
  return affine(a.ax() + t * (b.ax() - a.ax()), a.ay() + t * (b.ay() - a.ay()));
}

HPoint point_along(const HPoint& from, const HPoint& toward, Scalar dist) {
  const Scalar dx = toward.ax() - from.ax();
  const Scalar dy = toward.ay() - from.ay();
  const Scalar n = std::sqrt(dx * dx + dy * dy);
  if (n == 0.0) throw SkipTrial{};
  return affine(from.ax() + dist * dx / n, from.ay() + dist * dy / n);
}

/// Dimensionless incidence residual of a (possibly infinite) point on a line.
Scalar incid(const HPoint& p, const HLine& l, Scalar scale) {
  if (p.is_infinite()) return std::abs(l.eval(p));
  return point_line_distance(p, l) / scale;
}

Scalar collinearity(const HPoint& p, const HPoint& q, const HPoint& r, Scalar scale) {
  const Scalar det = (q.ax() - p.ax()) * (r.ay() - p.ay()) - (q.ay() - p.ay()) * (r.ax() - p.ax());
  return std::abs(det) / (scale * scale);
}

/// |dot| of the unit directions p->q and r->s; 0 iff the segments are
/// perpendicular.
Scalar direction_dot(const HPoint& p, const HPoint& q, const HPoint& r, const HPoint& s) {
  Scalar ux = q.ax() - p.ax(), uy = q.ay() - p.ay();
  Scalar vx = s.ax() - r.ax(), vy = s.ay() - r.ay();
  const Scalar nu = std::sqrt(ux * ux + uy * uy), nv = std::sqrt(vx * vx + vy * vy);
  if (nu == 0.0 || nv == 0.0) throw SkipTrial{};
  return std::abs((ux * vx + uy * vy) / (nu * nv));
}

Scalar min_sideline_distance(const HPoint& p, const Triangle& t) {
  return std::min({point_line_distance(p, t.line_bc()), point_line_distance(p, t.line_ca()),
                   point_line_distance(p, t.line_ab())});
}

/// P uniform in the circumdisk, rejected near the circle and the sidelines.
HPoint sample_point_in_disk(CounterRng& rng, const Triangle& t, const Circle& circ,
                            Scalar scale) {
  const Scalar r = std::sqrt(circ.r_sq);
  const Scalar cx = circ.center.ax(), cy = circ.center.ay();
  for (int i = 0; i < 256; ++i) {
    const Scalar px = rng.uniform(cx - r, cx + r);
    const Scalar py = rng.uniform(cy - r, cy + r);
    const Scalar d = std::sqrt((px - cx) * (px - cx) + (py - cy) * (py - cy));
    if (d > r * (1.0 - kMargin)) continue;
    const HPoint p = affine(px, py);
    if (min_sideline_distance(p, t) < kMargin * scale) continue;
    return p;
  }
  throw SkipTrial{};
}

/// P uniform in the triangle interior with a barycentric floor.
HPoint sample_interior_point(CounterRng& rng, const Triangle& t) {
  for (int i = 0; i < 256; ++i) {
    const Scalar u1 = rng.next_double(), u2 = rng.next_double();
    const Scalar lo = std::min(u1, u2), hi = std::max(u1, u2);
    const Scalar bu = lo, bv = hi - lo, bw = 1.0 - hi;
    if (std::min({bu, bv, bw}) < 0.02) continue;
    return from_barycentric(Barycentric(bu, bv, bw), t);
  }
  throw SkipTrial{};
}

HLine sample_line(CounterRng& rng) {
  for (int i = 0; i < 256; ++i) {
    const HPoint p = affine(rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0));
    const HPoint q = affine(rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0));
    if (distance(p, q) < 1.0) continue;
    return join(p, q);
  }
  throw SkipTrial{};
}

/// Acute scalene triangle: all angles in [0.25 rad, ~84 deg].
Triangle sample_acute_triangle(std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  constexpr Scalar kCosMin = 0.96891242171064975;  // cos(0.25)
  constexpr Scalar kCosMax = 0.10;                 // stay clear of right angles
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const Scalar ax = rng.uniform(0.0, 10.0), ay = rng.uniform(0.0, 10.0);
    const Scalar bx = rng.uniform(0.0, 10.0), by = rng.uniform(0.0, 10.0);
    const Scalar cx = rng.uniform(0.0, 10.0), cy = rng.uniform(0.0, 10.0);
    const Scalar ab2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
    const Scalar bc2 = (cx - bx) * (cx - bx) + (cy - by) * (cy - by);
    const Scalar ca2 = (ax - cx) * (ax - cx) + (ay - cy) * (ay - cy);
    if (ab2 < 1.0 || bc2 < 1.0 || ca2 < 1.0) continue;
    const Scalar ab = std::sqrt(ab2), bc = std::sqrt(bc2), ca = std::sqrt(ca2);
    const Scalar cos_a = (ab2 + ca2 - bc2) / (2.0 * ab * ca);
    const Scalar cos_b = (ab2 + bc2 - ca2) / (2.0 * ab * bc);
    const Scalar cos_c = (bc2 + ca2 - ab2) / (2.0 * bc * ca);
    if (cos_a > kCosMin || cos_b > kCosMin || cos_c > kCosMin) continue;
    if (cos_a < kCosMax || cos_b < kCosMax || cos_c < kCosMax) continue;
    return Triangle(HPoint(ax, ay), HPoint(bx, by), HPoint(cx, cy));
  }
  throw SkipTrial{};
}

Scene build_scene_or_skip(const Triangle& t, const HPoint& p, Scalar x, const Tolerance& tol) {
  try {
    return build_scene(t, p, x, tol);
  } catch (const GeomError& e) {
    if (e.code() == ErrorCode::ConcentricCircles) throw SkipTrial{};
    throw;
  }
}

HPoint point_on_io_line(const Triangle& t, Scalar tparam, Scalar scale) {
  const HPoint i = center(t, CenterKind::Incenter);
  const HPoint o = center(t, CenterKind::Circumcenter);
  if (distance(i, o) < kMargin * scale) throw SkipTrial{};  // near-equilateral
  return lerp(i, o, tparam);
}

}  // namespace

CheckReport check_equidistant_arc_midpoint(const TrialConfig& cfg) {
  return run_trials("P2.1", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("P2.1", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);
    CounterRng rng(cfg.seed, trial_stream("P2.1", trial, 1));

    const Scalar min_side = std::min({t.side_a(), t.side_b(), t.side_c()});
    const Scalar u = rng.uniform(0.05, 0.45) * min_side;

    const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
    const HPoint i = center(t, CenterKind::Incenter, tol);
    const HLine bisector = join(t.a(), i, tol);
    const auto hits = meet_line(bisector, to_conic(circ, tol), tol);
    if (hits.size() != 2) throw SkipTrial{};
    const HPoint d = distance(hits[0], t.a()) > distance(hits[1], t.a()) ? hits[0] : hits[1];

    // Equal offsets from B along BA and from C beyond C along AC.
    const HPoint b_off = point_along(t.b(), t.a(), u);
    const HPoint c_off = point_along(t.a(), t.c(), t.side_b() + u);
    rec.observe(trial, "offset points equidistant from arc point",
                std::abs(distance(d, b_off) - distance(d, c_off)) / scale);
    rec.observe(trial, "arc point equidistant from B and C (u = 0)",
                std::abs(distance(d, t.b()) - distance(d, t.c())) / scale);
  });
}

CheckReport check_metric_identity(const TrialConfig& cfg) {
  return run_trials("P2.2", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("P2.2", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);
    CounterRng rng(cfg.seed, trial_stream("P2.2", trial, 1));

    const HPoint p = sample_interior_point(rng, t);
    HPoint q(0, 0);
    try {
      q = isogonal_conjugate(p, t, tol);
    } catch (const GeomError&) {
      throw SkipTrial{};
    }
    if (q.is_infinite(tol)) throw SkipTrial{};

    Scalar r_pq_sq = 0.0;
    try {
      const Triangle refl = reflection_triangle(p, t, tol);
      r_pq_sq = circumcircle(refl.a(), refl.b(), refl.c(), tol).r_sq;
    } catch (const GeomError&) {
      throw SkipTrial{};
    }
    const HPoint h = center(t, CenterKind::Orthocenter, tol);
    const HPoint o = center(t, CenterKind::Circumcenter, tol);
    const Scalar r_sq = circumcircle(t.a(), t.b(), t.c(), tol).r_sq;
    const Scalar hq = distance(h, q), hp = distance(h, p), oh = distance(o, h);
    // The circumcircle term must be taken signed (minus the power of H):
    // R^2 - OH^2 is negative when H lies outside the circumcircle, and the
    // absolute value breaks the identity there. Empirically verified over
    // obtuse samples; see the dedicated obtuse regression test.
    const Scalar rhs = hq * hq + hp * hp + (r_sq - oh * oh);
    rec.observe(trial, "reflection-triangle circumradius identity",
                std::abs(r_pq_sq - rhs) / (scale * scale));
  });
}

CheckReport check_orthology_lemmas(const TrialConfig& cfg) {
  return run_trials("L2.2", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("L2.2", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);
    CounterRng rng(cfg.seed, trial_stream("L2.2", trial, 1));

    const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
    const HPoint p = sample_point_in_disk(rng, t, circ, scale);
    const Scalar x = rng.uniform(0.1, 0.75) * t.inradius();
    const Scene sc = build_scene_or_skip(t, p, x, cfg.tol);
    const Triangle& bp = sc.bisector_pedals;

    // (a) Each bisector-pedal vertex sees the matching offset chord at a
    // right angle from the circle center.
    rec.observe(trial, "A' to O1 perp B1C1",
                direction_dot(bp.a(), sc.o1.center, sc.offsets.b1, sc.offsets.c1));
    rec.observe(trial, "B' to O1 perp A1C1",
                direction_dot(bp.b(), sc.o1.center, sc.offsets.a1, sc.offsets.c1));
    rec.observe(trial, "C' to O1 perp A1B1",
                direction_dot(bp.c(), sc.o1.center, sc.offsets.a1, sc.offsets.b1));
    rec.observe(trial, "A' to O2 perp B2C2",
                direction_dot(bp.a(), sc.o2.center, sc.offsets.b2, sc.offsets.c2));
    rec.observe(trial, "B' to O2 perp A2C2",
                direction_dot(bp.b(), sc.o2.center, sc.offsets.a2, sc.offsets.c2));
    rec.observe(trial, "C' to O2 perp A2B2",
                direction_dot(bp.c(), sc.o2.center, sc.offsets.a2, sc.offsets.b2));

    // (b) The orthologic centers are isogonal conjugates of the circle
    // centers w.r.t. the bisector-pedal triangle. The barycentric product
    // map loses ~2 digits per digit of sideline proximity, so the
    // observation is skipped when Q1/Q2 sits too close to a sideline.
    auto bary_ratio = [&](const HPoint& pt) {
      const Barycentric bc = to_barycentric(pt, bp, tol);
      const Scalar mx = std::max({std::abs(bc.u), std::abs(bc.v), std::abs(bc.w)});
      return std::min({std::abs(bc.u), std::abs(bc.v), std::abs(bc.w)}) / mx;
    };
    if (bary_ratio(sc.q1) > 1e-3 && bary_ratio(sc.q2) > 1e-3) {
      try {
        const HPoint i1 = isogonal_conjugate(sc.q1, bp, tol);
        const HPoint i2 = isogonal_conjugate(sc.q2, bp, tol);
        // The circle centers escape to infinity as an offset triangle
        // flattens (Q near the bisector-pedal circumcircle), so compare at
        // the points' own distance scale.
        if (!i1.is_infinite(tol) && !i2.is_infinite(tol)) {
          rec.observe(trial, "isogonal of Q1 is O1",
                      distance(i1, sc.o1.center) /
                          std::max(scale, distance(sc.o1.center, sc.h_prime)));
          rec.observe(trial, "isogonal of Q2 is O2",
                      distance(i2, sc.o2.center) /
                          std::max(scale, distance(sc.o2.center, sc.h_prime)));
        }
      } catch (const GeomError&) {
        throw SkipTrial{};
      }
    }

    // (c) A1B1C1 is the reflection triangle of Q1.
    try {
      const Triangle refl = reflection_triangle(sc.q1, bp, tol);
      rec.observe(trial, "A1 is Q1 reflected over B'C'",
                  distance(refl.a(), sc.offsets.a1) / scale);
      rec.observe(trial, "B1 is Q1 reflected over C'A'",
                  distance(refl.b(), sc.offsets.b1) / scale);
      rec.observe(trial, "C1 is Q1 reflected over A'B'",
                  distance(refl.c(), sc.offsets.c1) / scale);
    } catch (const GeomError&) {
      throw SkipTrial{};
    }

    // (d) H' is equidistant from the two orthologic centers.
    rec.observe(trial, "H'Q1 = H'Q2",
                std::abs(distance(sc.h_prime, sc.q1) - distance(sc.h_prime, sc.q2)) / scale);

    // (e) Q1, Q, Q2 collinear on a line perpendicular to the Steiner line,
    // which carries both H' and Q.
    rec.observe(trial, "Q1, Q, Q2 collinear", collinearity(sc.q1, sc.q, sc.q2, scale));
    rec.observe(trial, "q line perp Steiner line",
                perpendicular_residual(sc.q_line, sc.steiner_p, tol));
    rec.observe(trial, "H' on Steiner line", incid(sc.h_prime, sc.steiner_p, scale));
    rec.observe(trial, "Q on Steiner line", incid(sc.q, sc.steiner_p, scale));
  });
}

CheckReport check_fixed_point(const TrialConfig& cfg) {
  return run_trials("T2.1", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("T2.1", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);
    CounterRng rng(cfg.seed, trial_stream("T2.1", trial, 1));

    const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
    const HPoint p = sample_point_in_disk(rng, t, circ, scale);
    const Scalar inr = t.inradius();
    int built = 0;
    for (Scalar frac : cfg.x_grid) {
      try {
        const Scene sc = build_scene(t, p, frac * inr, cfg.tol);
        rec.observe(trial, "orthocenter of bisector pedals on radical axis",
                    incid(sc.h_prime, sc.rad_axis, scale));
        ++built;
      } catch (const GeomError& e) {
        if (e.code() != ErrorCode::ConcentricCircles) throw;
      }
    }
    if (built == 0) throw SkipTrial{};
  });
}

CheckReport check_steiner_euler(const TrialConfig& cfg) {
  return run_trials("P3.1", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("P3.1", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);
    CounterRng rng(cfg.seed, trial_stream("P3.1", trial, 1));

    const Scalar tp = rng.uniform(cfg.t_range.first, cfg.t_range.second);
    const HPoint p = point_on_io_line(t, tp, scale);

    Triangle bp = bisector_pedal_triangle(t, p, tol);
    const HPoint op = center(bp, CenterKind::Circumcenter, tol);
    const HPoint hp = center(bp, CenterKind::Orthocenter, tol);
    if (distance(op, hp) < 1e-6 * scale) throw SkipTrial{};
    const HLine steiner = steiner_line(p, bp, tol);
    rec.observe(trial, "Steiner line equals Euler line of bisector pedals",
                line_residual(steiner, join(op, hp, tol)));

    // Same statement phrased on an independent triangle: pedals of the
    // circumcenter onto the altitude lines.
    const Triangle t2 = sample_triangle(cfg.seed, trial_stream("P3.1", trial, 2));
    const Scalar scale2 = configuration_diameter(t2);
    const Tolerance tol2 = cfg.tol.with_scale(scale2);
    const HPoint h2 = center(t2, CenterKind::Orthocenter, tol2);
    const HPoint o2 = center(t2, CenterKind::Circumcenter, tol2);
    if (distance(h2, o2) < kMargin * scale2) throw SkipTrial{};
    if (std::min({distance(h2, t2.a()), distance(h2, t2.b()), distance(h2, t2.c())}) <
        kMargin * scale2)
      throw SkipTrial{};
    const HPoint as = foot_of_perpendicular(o2, join(t2.a(), h2, tol2), tol2);
    const HPoint bs = foot_of_perpendicular(o2, join(t2.b(), h2, tol2), tol2);
    const HPoint cs = foot_of_perpendicular(o2, join(t2.c(), h2, tol2), tol2);
    Triangle star(as, bs, cs, tol2);
    const HPoint o_star = center(star, CenterKind::Circumcenter, tol2);
    const HPoint h_star = center(star, CenterKind::Orthocenter, tol2);
    if (distance(o_star, h_star) < 1e-6 * scale2) throw SkipTrial{};
    rec.observe(trial, "Steiner line of O w.r.t. altitude pedals equals their Euler line",
                line_residual(steiner_line(o2, star, tol2), join(o_star, h_star, tol2)));
  });
}

CheckReport check_isogonal_parallel(const TrialConfig& cfg) {
  return run_trials("P3.2", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("P3.2", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);
    CounterRng rng(cfg.seed, trial_stream("P3.2", trial, 1));

    const HLine l = sample_line(rng);
    const HPoint o = center(t, CenterKind::Circumcenter, tol);
    const HPoint tt = foot_of_perpendicular(o, l, tol);
    if (min_sideline_distance(tt, t) < kMargin * scale) throw SkipTrial{};

    const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
    const auto dir = unit_direction(l, tol);
    const Scalar s_a = rng.uniform(0.1, 0.6) * scale;
    const Scalar s_b = rng.uniform(0.65, 1.2) * scale;

    std::array<std::array<Scalar, 2>, 2> dirs{};
    std::array<HPoint, 2> img_s = {HPoint(1, 0), HPoint(1, 0)};
    std::array<HPoint, 2> img_r = {HPoint(1, 0), HPoint(1, 0)};
    const std::array<Scalar, 2> offsets = {s_a, s_b};
    for (int k = 0; k < 2; ++k) {
      const HPoint r = affine(tt.ax() + offsets[k] * dir[0], tt.ay() + offsets[k] * dir[1]);
      const HPoint s = affine(tt.ax() - offsets[k] * dir[0], tt.ay() - offsets[k] * dir[1]);
      for (const HPoint* pt : {&r, &s}) {
        if (min_sideline_distance(*pt, t) < kMargin * scale) throw SkipTrial{};
        if (std::abs(power_of_point(*pt, circ, tol)) < kMargin * scale * scale) throw SkipTrial{};
      }
      try {
        img_r[k] = isogonal_conjugate(r, t, tol);
        img_s[k] = isogonal_conjugate(s, t, tol);
        dirs[k] = unit_direction(join(img_s[k], img_r[k], tol), tol);
      } catch (const GeomError&) {
        throw SkipTrial{};
      }
    }
    rec.observe(trial, "image chord direction is fixed",
                std::abs(dirs[0][0] * dirs[1][1] - dirs[0][1] * dirs[1][0]));

    // Harmonic companion: (T', L'; S', R') = -1 on the circumconic, read off
    // a vertex pencil cut by the opposite side.
    try {
      const HPoint t_img = isogonal_conjugate(tt, t, tol);
      const HPoint l_inf_img = isogonal_conjugate(meet(l, HLine::infinity_line(), tol), t, tol);
      const HPoint* vertex = &t.a();
      HLine transversal = t.line_bc();
      if (point_residual(*vertex, t_img) <= 1e-9 || point_residual(*vertex, l_inf_img) <= 1e-9 ||
          point_residual(*vertex, img_s[0]) <= 1e-9 || point_residual(*vertex, img_r[0]) <= 1e-9) {
        vertex = &t.b();
        transversal = t.line_ca();
      }
      const HPoint m1 = meet(join(*vertex, t_img, tol), transversal, tol);
      const HPoint m2 = meet(join(*vertex, l_inf_img, tol), transversal, tol);
      const HPoint m3 = meet(join(*vertex, img_s[0], tol), transversal, tol);
      const HPoint m4 = meet(join(*vertex, img_r[0], tol), transversal, tol);
      rec.observe(trial, "harmonic pencil through the images",
                  std::abs(cross_ratio(m1, m2, m3, m4, tol) + 1.0));
    } catch (const GeomError&) {
      throw SkipTrial{};
    }
  });
}

CheckReport check_polarity(const TrialConfig& cfg) {
  return run_trials("P3.3", cfg, 10.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("P3.3", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);
    CounterRng rng(cfg.seed, trial_stream("P3.3", trial, 1));

    const HLine l1 = sample_line(rng);
    const HLine l2 = sample_line(rng);

    Conic c1 = [&] {
      try {
        return isogonal_image_of_line(l1, t, tol);
      } catch (const GeomError&) {
        throw SkipTrial{};
      }
    }();
    Conic c2 = [&] {
      try {
        return isogonal_image_of_line(l2, t, tol);
      } catch (const GeomError&) {
        throw SkipTrial{};
      }
    }();
    if (c1.is_degenerate() || c2.is_degenerate()) throw SkipTrial{};

    const HPoint anchor = foot_of_perpendicular(center(t, CenterKind::Centroid, tol), l1, tol);
    const auto dir = unit_direction(l1, tol);
    const Scalar u = rng.uniform(-1.2, 1.2);
    const HPoint x = affine(anchor.ax() + u * scale * dir[0], anchor.ay() + u * scale * dir[1]);
    if (min_sideline_distance(x, t) < kMargin * scale) throw SkipTrial{};
    if (std::abs(c2.quad(x)) < 1e-6) throw SkipTrial{};  // x nearly self-conjugate

    try {
      const HLine polar2 = polar_line(x, c2, tol);
      const HPoint y = meet(l1, polar2, tol);
      if (point_residual(x, y) < 1e-9) throw SkipTrial{};
      const HPoint xi = isogonal_conjugate(x, t, tol);
      const HPoint yi = isogonal_conjugate(y, t, tol);
      const HLine image_chord = join(xi, yi, tol);
      const HPoint pole = pole_of_line(l2, c1, tol);
      rec.observe(trial, "image chord passes the pole", incid(pole, image_chord, scale));

      // Conjugates w.r.t. the circumcircle: the image chord passes the
      // center of the circumconic through the two images.
      const Conic circ_conic = to_conic(circumcircle(t.a(), t.b(), t.c(), tol), tol);
      if (std::abs(circ_conic.quad(x)) < 1e-6) throw SkipTrial{};
      const HPoint yc = meet(l1, polar_line(x, circ_conic, tol), tol);
      if (point_residual(x, yc) < 1e-9) throw SkipTrial{};
      const HPoint yci = isogonal_conjugate(yc, t, tol);
      const Conic five = conic_through_5(t.a(), t.b(), t.c(), xi, yci, tol);
      if (five.is_degenerate()) throw SkipTrial{};
      rec.observe(trial, "image chord passes the circumconic center",
                  incid(conic_center(five, tol), join(xi, yci, tol), scale));
    } catch (const GeomError&) {
      throw SkipTrial{};
    }
  });
}

CheckReport check_fixed_line(const TrialConfig& cfg) {
  return run_trials("T3.1", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("T3.1", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);
    CounterRng rng(cfg.seed, trial_stream("T3.1", trial, 1));

    const Scalar tp = rng.uniform(cfg.t_range.first, cfg.t_range.second);
    const HPoint p = point_on_io_line(t, tp, scale);
    const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
    if (std::abs(power_of_point(p, circ, tol)) < kMargin * scale * scale) throw SkipTrial{};
    if (min_sideline_distance(p, t) < kMargin * scale) throw SkipTrial{};

    const Scalar inr = t.inradius();
    std::vector<Scene> scenes;
    for (Scalar frac : cfg.x_grid) {
      try {
        scenes.push_back(build_scene(t, p, frac * inr, cfg.tol));
      } catch (const GeomError& e) {
        if (e.code() != ErrorCode::ConcentricCircles) throw;
      }
    }
    if (scenes.size() < 2) throw SkipTrial{};

    for (std::size_t i = 1; i < scenes.size(); ++i)
      rec.observe(trial, "radical axis agrees across offsets",
                  line_residual(scenes[i].rad_axis, scenes[0].rad_axis));

    const Scene& sc = scenes.front();
    rec.observe(trial, "Q is the foot of the circumcenter on the q line",
                distance(sc.q, foot_of_perpendicular(sc.o_prime, sc.q_line, tol)) / scale);
    rec.observe(trial, "P on the image conic", std::abs(sc.c_conic.quad(sc.p)));
    rec.observe(trial, "pedal circumcenter on the image conic",
                std::abs(sc.c_conic.quad(sc.o_p)));
    try {
      const HLine tangent = polar_line(sc.o_p, sc.c_conic, tol);
      rec.observe(trial, "radical axis perp tangent at the pedal circumcenter",
                  perpendicular_residual(sc.rad_axis, tangent, tol));
    } catch (const GeomError&) {
      throw SkipTrial{};
    }
  });
}

CheckReport check_section4(const TrialConfig& cfg) {
  return run_trials("S4", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("S4", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);

    const HPoint be = center(t, CenterKind::Bevan, tol);
    const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
    if (std::abs(power_of_point(be, circ, tol)) < kMargin * scale * scale) throw SkipTrial{};

    const Triangle bp = bisector_pedal_triangle(t, be, tol);
    const HPoint h_prime = center(bp, CenterKind::Orthocenter, tol);
    rec.observe(trial, "orthocenter of Bevan bisector pedals is the Nagel point",
                distance(h_prime, center(t, CenterKind::Nagel, tol)) / scale);

    const Triangle pedal = pedal_triangle(be, t, tol);
    const HPoint o0 = circumcircle(pedal.a(), pedal.b(), pedal.c(), tol).center;
    rec.observe(trial, "Bevan point, H', pedal circumcenter collinear",
                collinearity(be, h_prime, o0, scale));

    // Altitude-pedal framing on an acute triangle.
    const Triangle ta = sample_acute_triangle(cfg.seed, trial_stream("S4", trial, 1));
    const Scalar scale_a = configuration_diameter(ta);
    const Tolerance tol_a = cfg.tol.with_scale(scale_a);
    const HPoint h = center(ta, CenterKind::Orthocenter, tol_a);
    const HPoint o = center(ta, CenterKind::Circumcenter, tol_a);
    if (distance(h, o) < 1e-6 * scale_a) throw SkipTrial{};
    if (std::min({distance(h, ta.a()), distance(h, ta.b()), distance(h, ta.c())}) <
        kMargin * scale_a)
      throw SkipTrial{};
    const HPoint ah = foot_of_perpendicular(ta.a(), ta.line_bc(), tol_a);
    const HPoint bh = foot_of_perpendicular(ta.b(), ta.line_ca(), tol_a);
    const HPoint ch = foot_of_perpendicular(ta.c(), ta.line_ab(), tol_a);
    const HPoint as = foot_of_perpendicular(o, join(ta.a(), h, tol_a), tol_a);
    const HPoint bs = foot_of_perpendicular(o, join(ta.b(), h, tol_a), tol_a);
    const HPoint cs = foot_of_perpendicular(o, join(ta.c(), h, tol_a), tol_a);
    try {
      const Triangle star(as, bs, cs, tol_a);
      const HPoint h_star = center(star, CenterKind::Orthocenter, tol_a);
      const HPoint j = meet(join(ta.a(), o, tol_a), join(bh, ch, tol_a), tol_a);
      rec.observe(trial, "altitude-pedal orthocenter on the A_H-J line",
                  incid(h_star, join(ah, j, tol_a), scale_a));
    } catch (const GeomError&) {
      throw SkipTrial{};
    }
  });
}

CheckReport check_open_problem(const TrialConfig& cfg) {
  return run_trials("T1.1", cfg, 1.0, [&](int trial, Recorder& rec) {
    const Triangle t = sample_triangle(cfg.seed, trial_stream("T1.1", trial));
    const Scalar scale = configuration_diameter(t);
    const Tolerance tol = cfg.tol.with_scale(scale);

    const HPoint be = center(t, CenterKind::Bevan, tol);
    const Circle circ = circumcircle(t.a(), t.b(), t.c(), tol);
    if (std::abs(power_of_point(be, circ, tol)) < kMargin * scale * scale) throw SkipTrial{};

    const HPoint i = center(t, CenterKind::Incenter, tol);
    const HPoint g = center(t, CenterKind::Centroid, tol);
    const HPoint n = center(t, CenterKind::Nagel, tol);
    if (distance(i, n) < 1e-6 * scale) throw SkipTrial{};
    const HLine nagel_line = join(i, n, tol);

    const Scalar inr = t.inradius();
    int built = 0;
    for (Scalar frac : cfg.x_grid) {
      try {
        const Scene sc = build_scene(t, be, frac * inr, cfg.tol);
        rec.observe(trial, "incenter on the radical axis", incid(i, sc.rad_axis, scale));
        rec.observe(trial, "centroid on the radical axis", incid(g, sc.rad_axis, scale));
        rec.observe(trial, "Nagel point on the radical axis", incid(n, sc.rad_axis, scale));
        rec.observe(trial, "radical axis is the Nagel line",
                    line_residual(sc.rad_axis, nagel_line));
        ++built;
      } catch (const GeomError& e) {
        if (e.code() != ErrorCode::ConcentricCircles) throw;
      }
    }
    if (built == 0) throw SkipTrial{};
  });
}

namespace {

constexpr CheckInfo kCatalog[] = {
    {"P2.1", "equal side offsets are equidistant from the bisector's second circle point", 1.0,
     &check_equidistant_arc_midpoint},
    {"P2.2", "reflection-triangle circumradius metric identity", 1.0, &check_metric_identity},
    {"L2.2", "orthology and Steiner-line structure of the offset triangles", 1.0,
     &check_orthology_lemmas},
    {"T2.1", "radical axis of the offset circumcircles passes a fixed point", 1.0,
     &check_fixed_point},
    {"P3.1", "Steiner line equals the Euler line for P on the incenter-circumcenter line", 1.0,
     &check_steiner_euler},
    {"P3.2", "isogonal images of symmetric line points move parallel to a fixed line", 1.0,
     &check_isogonal_parallel},
    {"P3.3", "isogonal conjugation sends conjugate points to a line through the pole", 10.0,
     &check_polarity},
    {"T3.1", "radical axis is a fixed line for P on the incenter-circumcenter line", 1.0,
     &check_fixed_line},
    {"S4", "Bevan-point configuration: Nagel orthocenter and collinearity", 1.0, &check_section4},
    {"T1.1", "radical axis of the Bevan configuration is the Nagel line", 1.0,
     &check_open_problem},
};

void validate(const TrialConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(cfg.tol.exact_tol > 0.0) || cfg.tol.exact_tol > cfg.tol.abs_tol)
    throw std::invalid_argument("need 0 < exact_tol <= abs_tol");
  if (!(cfg.tol.scale > 0.0)) throw std::invalid_argument("scale must be positive");
  for (Scalar x : cfg.x_grid)
    if (!(x > 0.0)) throw std::invalid_argument("x_grid values must be positive");
  const Scalar lo = cfg.t_range.first, hi = cfg.t_range.second;
  if (!(lo <= hi)) throw std::invalid_argument("empty t_range");
  if (!(lo > 0.2 || hi < -0.2)) throw std::invalid_argument("t_range must exclude |t| <= 0.2");
}

}  // namespace

std::span<const CheckInfo> check_catalog() { return kCatalog; }

const CheckInfo* find_check(std::string_view id) {
  for (const CheckInfo& info : kCatalog)
    if (id == info.id) return &info;
  return nullptr;
}

CheckReport run_check(std::string_view id, const TrialConfig& cfg) {
  validate(cfg);
  const CheckInfo* info = find_check(id);
  if (info == nullptr) raise(ErrorCode::UnknownCheckId, std::string(id));
  return info->fn(cfg);
}

std::vector<CheckReport> run_suite(std::span<const std::string> ids, const TrialConfig& cfg) {
  validate(cfg);
  for (const std::string& id : ids)
    if (find_check(id) == nullptr) raise(ErrorCode::UnknownCheckId, id);
  std::vector<CheckReport> reports;
  reports.reserve(ids.size());
  for (const std::string& id : ids) reports.push_back(find_check(id)->fn(cfg));
  return reports;
}

}  // namespace pedax
