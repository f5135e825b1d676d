#pragma once

#include "linescan/cloud.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace linescan {

enum class Plane { XY, XZ, YZ };

std::optional<Plane> parse_plane(std::string_view name);

/// Orthographic scatter plot of one coordinate plane as a standalone SVG
/// document: size x size pixels, uniform scale fitted to the data bounds with
/// a 5% margin, one <circle> per point. The plot's vertical axis points up.
std::string plot_svg(const PointCloud& cloud, Plane plane, int size);

} // namespace linescan
