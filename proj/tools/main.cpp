// Command-line front end: `verify` runs the randomized checks, `construct`
// prints a scene as JSON, `figure` renders a scene as SVG.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pedax/checks.hpp"
#include "pedax/json_io.hpp"
#include "pedax/scene.hpp"
#include "pedax/svg.hpp"

namespace {

using namespace pedax;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::optional<std::pair<double, double>> parse_xy(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) return std::nullopt;
  try {
    std::size_t eaten = 0;
    const double x = std::stod(parts[0], &eaten);
    if (eaten != parts[0].size()) return std::nullopt;
    const double y = std::stod(parts[1], &eaten);
    if (eaten != parts[1].size()) return std::nullopt;
    return std::make_pair(x, y);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct ConstructInput {
  Triangle triangle;
  HPoint p;
  double x;
};

/// Parses and validates the construct/figure inputs. Any malformed or
/// degenerate *input* (bad coordinates, collinear triangle) exits 2 here;
/// geometric degeneracies of the configuration itself are left to the
/// builder and exit 1 at the call site.
std::optional<ConstructInput> parse_construct_input(const std::string& triangle_arg,
                                                    const std::string& point_arg, double x) {
  const auto vertex_tokens = split(triangle_arg, ' ');
  if (vertex_tokens.size() != 3) {
    std::cerr << "expected three vertices in --triangle, got " << vertex_tokens.size() << "\n";
    return std::nullopt;
  }
  std::vector<HPoint> vertices;
  for (const auto& tok : vertex_tokens) {
    const auto xy = parse_xy(tok);
    if (!xy) {
      std::cerr << "malformed vertex coordinates: " << tok << "\n";
      return std::nullopt;
    }
    vertices.emplace_back(xy->first, xy->second);
  }
  std::optional<Triangle> tri;
  try {
    tri.emplace(vertices[0], vertices[1], vertices[2]);
  } catch (const GeomError& e) {
    std::cerr << e.name() << "\n";
    return std::nullopt;
  }

  std::optional<HPoint> p;
  try {
    if (point_arg == "bevan") {
      p = center(*tri, CenterKind::Bevan);
    } else if (point_arg == "incenter") {
      p = center(*tri, CenterKind::Incenter);
    } else if (point_arg.rfind("io:", 0) == 0) {
      std::size_t eaten = 0;
      const std::string t_str = point_arg.substr(3);
      const double t = std::stod(t_str, &eaten);
      if (eaten != t_str.size()) throw std::invalid_argument(point_arg);
      const HPoint i = center(*tri, CenterKind::Incenter);
      const HPoint o = center(*tri, CenterKind::Circumcenter);
      p = HPoint(i.ax() + t * (o.ax() - i.ax()), i.ay() + t * (o.ay() - i.ay()));
    } else {
      const auto xy = parse_xy(point_arg);
      if (!xy) throw std::invalid_argument(point_arg);
      p = HPoint(xy->first, xy->second);
    }
  } catch (const std::exception&) {
    std::cerr << "malformed --point value: " << point_arg << "\n";
    return std::nullopt;
  }

  if (!(x >= 0.0)) {
    std::cerr << "--x must be non-negative\n";
    return std::nullopt;
  }
  return ConstructInput{*tri, *p, x};
}

int run_verify(const std::vector<std::string>& requested, int trials, std::uint64_t seed,
               double tol, bool as_json) {
  std::vector<std::string> ids = requested;
  if (ids.empty())
    for (const CheckInfo& info : check_catalog()) ids.emplace_back(info.id);
  for (const std::string& id : ids) {
    if (find_check(id) == nullptr) {
      std::cerr << "unknown check id: " << id << "\n";
      return 2;
    }
  }

  TrialConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.tol.abs_tol = tol;

  bool any_failed = false;
  for (const std::string& id : ids) {
    const CheckReport report = run_check(id, cfg);
    any_failed = any_failed || !report.passed;
    if (as_json) {
      std::cout << report_to_json_line(report) << "\n";
    } else {
      std::printf("%-6s %-6s trials=%-5d max_residual=%.3e tolerance=%.1e  %s\n",
                  report.id.c_str(), report.passed ? "PASS" : "FAIL", report.trials,
                  report.max_residual, report.tolerance, find_check(id)->title);
      for (const Failure& f : report.failures)
        std::printf("       trial %d residual=%.3e  %s\n", f.index, f.residual,
                    f.detail.c_str());
    }
  }
  return any_failed ? 1 : 0;
}

int run_construct(const ConstructInput& input) {
  try {
    const Scene scene = build_scene(input.triangle, input.p, input.x);
    std::cout << scene_to_json(scene) << "\n";
    return 0;
  } catch (const GeomError& e) {
    std::cerr << e.name() << "\n";
    return 1;
  }
}

int run_figure(const ConstructInput& input, const std::string& out_path,
               const std::string& show) {
  std::vector<SvgLayer> layers;
  if (show.empty()) {
    layers.push_back(SvgLayer::Triangle);
  } else {
    for (const std::string& name : split(show, ',')) {
      const auto layer = parse_svg_layer(name);
      if (!layer) {
        std::cerr << "unknown layer: " << name << "\n";
        return 2;
      }
      layers.push_back(*layer);
    }
  }
  try {
    const Scene scene = build_scene(input.triangle, input.p, input.x);
    const std::string svg = render_svg(scene, layers);
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << svg) || !out.flush()) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    return 0;
  } catch (const GeomError& e) {
    std::cerr << e.name() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verifier for pedal-triangle radical-axis configurations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the randomized checks");
  std::vector<std::string> check_ids;
  int trials = 200;
  std::uint64_t seed = 42;
  double tol = 1e-7;
  bool as_json = false;
  verify->add_option("--check", check_ids, "check id (repeatable; default: all)");
  verify->add_option("--trials", trials, "trials per check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--tol", tol, "base tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "one JSON report line per check");

  std::string triangle_arg, point_arg, show, out_path;
  double x = 0.0;

  auto* construct = app.add_subcommand("construct", "emit a scene document as JSON");
  construct->add_option("--triangle", triangle_arg, "vertices \"x1,y1 x2,y2 x3,y3\"")->required();
  construct->add_option("--point", point_arg, "\"px,py\" | bevan | incenter | io:t")->required();
  construct->add_option("--x", x, "offset distance along the side rays")->required();

  auto* figure = app.add_subcommand("figure", "render a scene as SVG");
  figure->add_option("--triangle", triangle_arg, "vertices \"x1,y1 x2,y2 x3,y3\"")->required();
  figure->add_option("--point", point_arg, "\"px,py\" | bevan | incenter | io:t")->required();
  figure->add_option("--x", x, "offset distance along the side rays")->required();
  figure->add_option("-o,--output", out_path, "output SVG path")->required();
  figure->add_option("--show", show,
                     "comma list: triangle,pedal,offsets,circles,radical-axis,nagel-line,conic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (verify->parsed()) return run_verify(check_ids, trials, seed, tol, as_json);

  const auto input = parse_construct_input(triangle_arg, point_arg, x);
  if (!input) return 2;
  if (construct->parsed()) return run_construct(*input);
  return run_figure(*input, out_path, show);
}
