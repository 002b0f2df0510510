#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pedax/scene.hpp"

namespace pedax {

enum class SvgLayer {
  Triangle,
  Pedal,
  Offsets,
  Circles,
  RadicalAxis,
  NagelLine,
  Conic,
};

/// Layer name as used on the command line ("radical-axis", ...).
const char* svg_layer_name(SvgLayer layer);
std::optional<SvgLayer> parse_svg_layer(std::string_view name);

/// Deterministic SVG rendering of the requested layers: fixed 6-decimal
/// coordinates, viewBox fitted to the drawn elements padded by 10%, and
/// elements sorted by (layer name, element name) so output is byte-stable.
std::string render_svg(const Scene& scene, const std::vector<SvgLayer>& layers);

}  // namespace pedax
