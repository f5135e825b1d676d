#pragma once

#include "linescan/geometry.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace linescan::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kIoError = 2,
    kPipelineError = 3,
};

/// Values found in a calibration file. Any key may be absent.
struct CalibrationFile {
    std::optional<double> s;
    std::optional<double> D;
    std::optional<double> r;
    std::optional<double> x0;
    std::optional<double> pixel_scale;
};

/// One "key = value" per line, keys s, D, r, x0, pixel_scale; '#' starts a
/// comment. Throws ParseError naming the line.
CalibrationFile parse_calibration_file(std::string_view text);

/// Frame paths in sweep order. Directories expand to the PNG files they
/// contain; the whole list is then sorted by file name (ties by full path).
std::vector<std::filesystem::path> order_frames(const std::vector<std::filesystem::path>& inputs);

/// Frame paths listed in a manifest, one per line, in the given order.
/// Relative paths resolve against the manifest's directory.
std::vector<std::filesystem::path> read_manifest(const std::filesystem::path& manifest);

/// Entry point for the `linescan` tool. Diagnostics go to `err` only.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace linescan::cli
