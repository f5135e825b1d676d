#pragma once

#include "linescan/cloud.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace linescan {

enum class CloudFormat { Xyz, Pcd, Obj };

std::string_view to_string(CloudFormat format) noexcept;
std::optional<CloudFormat> parse_cloud_format(std::string_view name);
/// Looks at the extension (case-insensitive): .xyz, .pcd, .obj.
std::optional<CloudFormat> format_from_path(const std::filesystem::path& path);

/// Fixed 6-decimal rendering used by every text format. Ties round to even
/// on the exact binary value; "-0.000000" is written as "0.000000".
std::string format_coordinate(double value);

/// "x y z\n" per point, no header.
std::string export_xyz(const PointCloud& cloud);
/// ASCII PCD v0.7 header followed by the xyz lines.
std::string export_pcd(const PointCloud& cloud);
/// "v x y z\n" per point; vertices only.
std::string export_obj(const PointCloud& cloud);
std::string export_cloud(const PointCloud& cloud, CloudFormat format);

// Importers throw ParseError with a 1-based line number.
PointCloud import_xyz(std::string_view text, std::string units = "mm");
PointCloud import_pcd(std::string_view text, std::string units = "mm");
PointCloud import_obj(std::string_view text, std::string units = "mm");
PointCloud import_cloud(std::string_view text, CloudFormat format, std::string units = "mm");

/// Format chosen from the extension; throws ParseError for unknown ones.
PointCloud read_cloud(const std::filesystem::path& path, std::string units = "mm");
void write_cloud(const std::filesystem::path& path, const PointCloud& cloud, CloudFormat format);

} // namespace linescan
