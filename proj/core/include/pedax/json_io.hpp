#pragma once

#include <string>

#include "pedax/checks.hpp"
#include "pedax/scene.hpp"

namespace pedax {

/// Scene document: JSON object with keys "triangle", "P", "x", "points",
/// "circles", "lines". Keys are sorted lexicographically, numbers use the
/// shortest representation that round-trips exactly, and points at infinity
/// are omitted.
std::string scene_to_json(const Scene& scene);

/// One check report as a single JSON line (no trailing newline).
std::string report_to_json_line(const CheckReport& report);

}  // namespace pedax
