#pragma once

#include "linescan/cloud.hpp"
#include "linescan/geometry.hpp"
#include "linescan/imaging.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace linescan {

/// Height field z = f(x, y) sampled on a regular grid, plus the distance D
/// from the camera to the background plane. Heights lie in [0, D).
class Scene {
public:
    /// Throws InvalidScene on a grid smaller than 2x2, a non-positive cell
    /// size or D, or a height outside [0, D).
    Scene(std::size_t columns, std::size_t rows, double cell_size, double background_distance,
          std::vector<double> heights);

    static Scene from_function(std::size_t columns, std::size_t rows, double cell_size,
                               double background_distance,
                               const std::function<double(double x, double y)>& height);

    [[nodiscard]] std::size_t columns() const noexcept { return columns_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] double cell_size() const noexcept { return cell_size_; }
    [[nodiscard]] double background_distance() const noexcept { return background_distance_; }
    [[nodiscard]] double extent_x() const noexcept;
    [[nodiscard]] double extent_y() const noexcept;
    [[nodiscard]] double grid_height(std::size_t column, std::size_t row) const noexcept
    {
        return heights_[row * columns_ + column];
    }

    /// Bilinear interpolation; (x, y) is clamped to the domain.
    [[nodiscard]] double height_at(double x, double y) const noexcept;

private:
    std::size_t columns_;
    std::size_t rows_;
    double cell_size_;
    double background_distance_;
    std::vector<double> heights_;
};

/// Plain-text scene: first line "width height cell_size D", then `height`
/// lines of `width` whitespace-separated heights. Throws ParseError / InvalidScene.
Scene parse_scene(std::string_view text);

/// Synthetic camera. Frame row i looks at scene y = i * extent_y / (height - 1);
/// the laser line sits at `baseline_column` on a zero-height surface.
struct CameraModel {
    std::size_t width = 320;
    std::size_t height = 240;
    std::size_t baseline_column = 80;
};

/// Optional degradations, all off by default.
struct RenderOptions {
    double blur_sigma = 0.0;     ///< Gaussian spread of the line, columns
    double noise_fraction = 0.0; ///< share of pixels hit by salt-and-pepper noise
    std::uint64_t seed = 0;
};

/// Black frame with a one-pixel pure red line; row i is lit at
/// baseline_column + round(f(laser_x, y_i) / pixel_scale).
/// Throws LaserOutOfScene when laser_x is outside [0, extent_x], InvalidScene
/// when the line leaves the frame.
Frame render_frame(const Scene& scene, const Calibration& calib, const CameraModel& camera,
                   double laser_x, const RenderOptions& options = {});

/// Laser positions laser_start + k * sweep_step(sweep, D), k < frame_count.
std::vector<double> sweep_positions(const Scene& scene, const SweepConfig& sweep,
                                    double laser_start);

std::vector<Frame> render_sweep(const Scene& scene, const Calibration& calib,
                                const CameraModel& camera, const SweepConfig& sweep,
                                double laser_start = 0.0, const RenderOptions& options = {});

/// Exact points the reconstruction should recover from render_sweep: the
/// unrounded line column of every row pushed through the same angle,
/// pixel scaling, per-frame minimum reference and sweep offset the pipeline
/// uses. Frame-major, row-ascending.
PointCloud ground_truth(const Scene& scene, const Calibration& calib, const CameraModel& camera,
                        const SweepConfig& sweep, double laser_start = 0.0,
                        std::string units = "mm");

} // namespace linescan
