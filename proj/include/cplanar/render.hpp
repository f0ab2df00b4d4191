#pragma once

#include <string>
#include <vector>

#include "cplanar/certificate.hpp"

namespace cplanar {

/// Vertex positions in math coordinates (y up) and one start angle per dart slot.
/// Angles around each vertex increase counterclockwise in rotation order.
struct Layout {
  std::vector<double> x, y;
  std::vector<double> angle;
};

/// Barycentric layout per component with its largest face pinned to a circle;
/// components are placed side by side.
Layout layout_map(const CGraph& cg);

/// SVG 1.1 drawing: c wedge rays, cluster trees as thick translucent strokes, and each
/// edge as a cubic curve leaving its endpoints at the dart angles of the layout.
std::string render_svg(const CGraph& cg, const std::vector<std::vector<EdgeId>>& cluster_trees);
std::string render_svg(const Certificate& cert);

/// Reads the edge curves back out of an SVG produced by render_svg and returns, per
/// vertex, its darts sorted counterclockwise by start tangent.
std::vector<std::vector<DartId>> extract_rotations(const std::string& svg, int vertex_count);

/// True when each extracted rotation is a cyclic shift of the map's rotation.
bool rotations_match(const CombMap& map, const std::vector<std::vector<DartId>>& extracted);

}  // namespace cplanar
