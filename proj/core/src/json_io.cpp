#include "pedax/json_io.hpp"

#include <json.hpp>

namespace pedax {

namespace {

using json = nlohmann::json;  // std::map-backed: keys come out sorted

json coords(const HPoint& p) { return json::array({p.ax(), p.ay()}); }

json line_coeffs(const HLine& l) { return json::array({l.l(), l.m(), l.n()}); }

void put_point(json& points, const char* name, const HPoint& p) {
  if (p.is_infinite()) return;  // points at infinity never appear in the document
  points[name] = coords(p);
}

json circle_obj(const Circle& c) {
  json j;
  j["center"] = coords(c.center);
  j["r_sq"] = c.r_sq;
  return j;
}

}  // namespace

std::string scene_to_json(const Scene& scene) {
  json j;
  j["triangle"] = json::array(
      {coords(scene.base.a()), coords(scene.base.b()), coords(scene.base.c())});
  j["P"] = coords(scene.p);
  j["x"] = scene.x;

  json points;
  put_point(points, "A_P", scene.pedal.a());
  put_point(points, "B_P", scene.pedal.b());
  put_point(points, "C_P", scene.pedal.c());
  put_point(points, "A1", scene.offsets.a1);
  put_point(points, "A2", scene.offsets.a2);
  put_point(points, "B1", scene.offsets.b1);
  put_point(points, "B2", scene.offsets.b2);
  put_point(points, "C1", scene.offsets.c1);
  put_point(points, "C2", scene.offsets.c2);
  put_point(points, "A'", scene.bisector_pedals.a());
  put_point(points, "B'", scene.bisector_pedals.b());
  put_point(points, "C'", scene.bisector_pedals.c());
  put_point(points, "H'", scene.h_prime);
  put_point(points, "Q", scene.q);
  put_point(points, "Q1", scene.q1);
  put_point(points, "Q2", scene.q2);
  put_point(points, "O1c", scene.o1.center);
  put_point(points, "O2c", scene.o2.center);
  put_point(points, "O_P", scene.o_p);
  put_point(points, "I", scene.i);
  put_point(points, "O", scene.o);
  put_point(points, "N", scene.nagel);
  put_point(points, "G", scene.centroid);
  put_point(points, "Be", scene.bevan);
  j["points"] = points;

  json circles;
  circles["O1"] = circle_obj(scene.o1);
  circles["O2"] = circle_obj(scene.o2);
  j["circles"] = circles;

  json lines;
  lines["radical_axis"] = line_coeffs(scene.rad_axis);
  lines["steiner"] = line_coeffs(scene.steiner_p);
  lines["q"] = line_coeffs(scene.q_line);
  j["lines"] = lines;

  return j.dump(2);
}

std::string report_to_json_line(const CheckReport& report) {
  json j;
  j["id"] = report.id;
  j["trials"] = report.trials;
  j["max_residual"] = report.max_residual;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  json fails = json::array();
  for (const Failure& f : report.failures) {
    json e;
    e["index"] = f.index;
    e["residual"] = f.residual;
    e["detail"] = f.detail;
    fails.push_back(e);
  }
  j["failures"] = fails;
  return j.dump();
}

}  // namespace pedax
