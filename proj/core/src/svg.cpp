#include "pedax/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pedax {

namespace {

std::string fmt(Scalar v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Box {
  Scalar x0 = std::numeric_limits<Scalar>::infinity();
  Scalar y0 = std::numeric_limits<Scalar>::infinity();
  Scalar x1 = -std::numeric_limits<Scalar>::infinity();
  Scalar y1 = -std::numeric_limits<Scalar>::infinity();

  void grow(Scalar x, Scalar y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
  bool empty() const { return !(x0 <= x1); }
  Scalar width() const { return x1 - x0; }
  Scalar height() const { return y1 - y0; }
};

struct Element {
  std::string layer;
  std::string name;
  std::string markup;  // "" marks a dropped element recorded as a comment
  std::string comment;
};

bool element_less(const Element& a, const Element& b) {
  if (a.layer != b.layer) return a.layer < b.layer;
  return a.name < b.name;
}

/// Clip an infinite line to a rectangle; false when it misses entirely.
bool clip_line(const HLine& l, const Box& box, Scalar out[4]) {
  if (l.is_infinity_line()) return false;
  const Scalar nn = l.l() * l.l() + l.m() * l.m();
  const Scalar px = -l.l() * l.n() / nn;
  const Scalar py = -l.m() * l.n() / nn;
  const Scalar dx = l.m(), dy = -l.l();
  Scalar t0 = -std::numeric_limits<Scalar>::infinity();
  Scalar t1 = std::numeric_limits<Scalar>::infinity();
  auto cut = [&](Scalar d, Scalar lo_gap, Scalar hi_gap) {
    if (std::abs(d) < 1e-300) return lo_gap <= 0.0 && hi_gap >= 0.0;
    Scalar ta = lo_gap / d, tb = hi_gap / d;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    return true;
  };
  if (!cut(dx, box.x0 - px, box.x1 - px)) return false;
  if (!cut(dy, box.y0 - py, box.y1 - py)) return false;
  if (t0 > t1) return false;
  out[0] = px + t0 * dx;
  out[1] = py + t0 * dy;
  out[2] = px + t1 * dx;
  out[3] = py + t1 * dy;
  return true;
}

std::string segment_path(Scalar x1, Scalar y1, Scalar x2, Scalar y2, const std::string& cls,
                         Scalar sw) {
  return "<path class=\"" + cls + "\" d=\"M " + fmt(x1) + " " + fmt(y1) + " L " + fmt(x2) + " " +
         fmt(y2) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(sw) + "\"/>";
}

}  // namespace

const char* svg_layer_name(SvgLayer layer) {
  switch (layer) {
    case SvgLayer::Triangle: return "triangle";
    case SvgLayer::Pedal: return "pedal";
    case SvgLayer::Offsets: return "offsets";
    case SvgLayer::Circles: return "circles";
    case SvgLayer::RadicalAxis: return "radical-axis";
    case SvgLayer::NagelLine: return "nagel-line";
    case SvgLayer::Conic: return "conic";
  }
  return "";
}

std::optional<SvgLayer> parse_svg_layer(std::string_view name) {
  for (SvgLayer layer : {SvgLayer::Triangle, SvgLayer::Pedal, SvgLayer::Offsets, SvgLayer::Circles,
                         SvgLayer::RadicalAxis, SvgLayer::NagelLine, SvgLayer::Conic})
    if (name == svg_layer_name(layer)) return layer;
  return std::nullopt;
}

std::string render_svg(const Scene& scene, const std::vector<SvgLayer>& layers) {
  auto wants = [&](SvgLayer l) {
    return std::find(layers.begin(), layers.end(), l) != layers.end();
  };

  Box box;
  std::vector<Element> elements;
  const Scalar diam = configuration_diameter(scene.base, &scene.p);

  struct Segment {
    std::string layer, name;
    Scalar x1, y1, x2, y2;
  };
  std::vector<Segment> segments;
  auto add_segment = [&](const char* layer, const std::string& name, const HPoint& p,
                         const HPoint& q) {
    if (p.is_infinite() || q.is_infinite()) {
      elements.push_back({layer, name, "", "dropped " + name + ": point at infinity"});
      return;
    }
    segments.push_back({layer, name, p.ax(), p.ay(), q.ax(), q.ay()});
    box.grow(p.ax(), p.ay());
    box.grow(q.ax(), q.ay());
  };

  if (wants(SvgLayer::Triangle)) {
    add_segment("triangle", "AB", scene.base.a(), scene.base.b());
    add_segment("triangle", "BC", scene.base.b(), scene.base.c());
    add_segment("triangle", "CA", scene.base.c(), scene.base.a());
  }
  if (wants(SvgLayer::Pedal)) {
    add_segment("pedal", "ApBp", scene.pedal.a(), scene.pedal.b());
    add_segment("pedal", "BpCp", scene.pedal.b(), scene.pedal.c());
    add_segment("pedal", "CpAp", scene.pedal.c(), scene.pedal.a());
  }

  struct Marker {
    std::string name;
    Scalar x, y;
  };
  std::vector<Marker> markers;
  if (wants(SvgLayer::Offsets)) {
    const std::pair<const char*, const HPoint*> pts[] = {
        {"A1", &scene.offsets.a1}, {"A2", &scene.offsets.a2}, {"B1", &scene.offsets.b1},
        {"B2", &scene.offsets.b2}, {"C1", &scene.offsets.c1}, {"C2", &scene.offsets.c2}};
    for (const auto& [name, pt] : pts) {
      if (pt->is_infinite()) {
        elements.push_back({"offsets", name, "", std::string("dropped ") + name +
                                                     ": point at infinity"});
        continue;
      }
      markers.push_back({name, pt->ax(), pt->ay()});
      box.grow(pt->ax(), pt->ay());
    }
  }

  struct CircleShape {
    std::string name;
    Scalar cx, cy, r;
  };
  std::vector<CircleShape> circles;
  if (wants(SvgLayer::Circles)) {
    for (const auto& [name, c] :
         {std::pair<const char*, const Circle*>{"O1", &scene.o1}, {"O2", &scene.o2}}) {
      const Scalar cx = c->center.ax(), cy = c->center.ay(), r = std::sqrt(c->r_sq);
      circles.push_back({name, cx, cy, r});
      box.grow(cx - r, cy - r);
      box.grow(cx + r, cy + r);
    }
  }

  std::vector<std::pair<Scalar, Scalar>> conic_pts;
  if (wants(SvgLayer::Conic)) {
    // Pencil through a conic point, directions spread by a rational map so
    // the trace is reproducible without trigonometry.
    const HPoint& base_pt = scene.bisector_pedals.a();
    const Scalar cx0 = scene.centroid.ax(), cy0 = scene.centroid.ay();
    for (int k = 0; k < 256; ++k) {
      const Scalar v = -1.0 + 2.0 * (k + 0.5) / 256.0;
      const Scalar u = v / (1.0 - v * v);
      const Scalar dx = 1.0 - u * u, dy = 2.0 * u;
      const HLine pencil(dy, -dx, dx * base_pt.ay() - dy * base_pt.ax());
      std::vector<HPoint> hits;
      try {
        hits = meet_line(pencil, scene.c_conic, scene.tol);
      } catch (const GeomError&) {
        break;
      }
      const HPoint* pick = nullptr;
      for (const HPoint& h : hits)
        if (!h.is_infinite() && (pick == nullptr || point_residual(*pick, base_pt) <
                                                        point_residual(h, base_pt)))
          pick = &h;
      if (pick == nullptr) continue;
      const Scalar hx = pick->ax(), hy = pick->ay();
      if (std::sqrt((hx - cx0) * (hx - cx0) + (hy - cy0) * (hy - cy0)) > 8.0 * diam) continue;
      conic_pts.emplace_back(hx, hy);
      box.grow(hx, hy);
    }
  }

  if (box.empty()) {
    box.grow(scene.base.a().ax(), scene.base.a().ay());
    box.grow(scene.base.b().ax(), scene.base.b().ay());
    box.grow(scene.base.c().ax(), scene.base.c().ay());
  }
  const Scalar pad = 0.1 * std::max({box.width(), box.height(), 1e-6});
  Box view = box;
  view.x0 -= pad;
  view.y0 -= pad;
  view.x1 += pad;
  view.y1 += pad;
  const Scalar diag = std::sqrt(view.width() * view.width() + view.height() * view.height());
  const Scalar sw = 0.004 * diag;

  for (const Segment& s : segments)
    elements.push_back({s.layer, s.name, segment_path(s.x1, s.y1, s.x2, s.y2, s.layer, sw), ""});

  const Scalar half = 0.012 * diag;
  for (const Marker& m : markers) {
    elements.push_back(
        {"offsets", m.name,
         "<path class=\"offsets\" d=\"M " + fmt(m.x - half) + " " + fmt(m.y - half) + " L " +
             fmt(m.x + half) + " " + fmt(m.y + half) + " M " + fmt(m.x - half) + " " +
             fmt(m.y + half) + " L " + fmt(m.x + half) + " " + fmt(m.y - half) +
             "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(sw) + "\"/>",
         ""});
  }

  for (const CircleShape& c : circles)
    elements.push_back({"circles", c.name,
                        "<circle class=\"circles\" cx=\"" + fmt(c.cx) + "\" cy=\"" + fmt(c.cy) +
                            "\" r=\"" + fmt(c.r) +
                            "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(sw) + "\"/>",
                        ""});

  auto add_line = [&](const char* layer, const std::string& name, const HLine& l) {
    Scalar seg[4];
    if (!clip_line(l, view, seg)) {
      elements.push_back({layer, name, "", "dropped " + name + ": outside the view box"});
      return;
    }
    elements.push_back({layer, name,
                        "<line class=\"" + std::string(layer) + "\" x1=\"" + fmt(seg[0]) +
                            "\" y1=\"" + fmt(seg[1]) + "\" x2=\"" + fmt(seg[2]) + "\" y2=\"" +
                            fmt(seg[3]) + "\" stroke=\"black\" stroke-width=\"" + fmt(sw) + "\"/>",
                        ""});
  };
  if (wants(SvgLayer::RadicalAxis)) add_line("radical-axis", "radical_axis", scene.rad_axis);
  if (wants(SvgLayer::NagelLine)) {
    try {
      add_line("nagel-line", "nagel_line", join(scene.i, scene.nagel, scene.tol));
    } catch (const GeomError&) {
      elements.push_back({"nagel-line", "nagel_line", "", "dropped nagel_line: degenerate"});
    }
  }

  if (wants(SvgLayer::Conic) && !conic_pts.empty()) {
    std::string pts;
    for (const auto& [x, y] : conic_pts) {
      if (!pts.empty()) pts += " ";
      pts += fmt(x) + "," + fmt(y);
    }
    elements.push_back({"conic", "image_conic",
                        "<polyline class=\"conic\" points=\"" + pts +
                            "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(sw) + "\"/>",
                        ""});
  }

  std::sort(elements.begin(), elements.end(), element_less);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(view.x0)
      << " " << fmt(view.y0) << " " << fmt(view.width()) << " " << fmt(view.height()) << "\">\n";
  out << "<g>\n";
  for (const Element& e : elements) {
    if (!e.comment.empty())
      out << "<!-- " << e.comment << " -->\n";
    else
      out << e.markup << "\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace pedax
