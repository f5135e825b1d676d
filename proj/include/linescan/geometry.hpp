#pragma once

#include "linescan/extraction.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace linescan {

/// Scanner geometry.
///
/// `s` and `D` are physical lengths (e.g. mm); `r` and `x0` are in pixels and
/// are converted with `pixel_scale` (physical units per pixel) wherever they
/// meet physical quantities. With pixel_scale = 1 all quantities share a unit.
struct Calibration {
    double s = 0.0;           ///< laser-to-camera baseline, > 0
    double D = 0.0;           ///< camera-to-background distance, > 0
    double r = 0.0;           ///< camera Y range, pixels
    double x0 = 0.0;          ///< minimum X coordinate, pixels
    double pixel_scale = 1.0; ///< physical units per pixel, > 0

    /// Throws InvalidCalibration on a non-positive or non-finite s, D or
    /// pixel_scale, or a non-finite r / x0.
    void validate() const;

    friend bool operator==(const Calibration&, const Calibration&) = default;
};

/// Angle in degrees; converted to radians only at the point of use.
struct Angle {
    double degrees = 0.0;

    [[nodiscard]] double radians() const noexcept;
};

/// Horizontal component k = s - pixel_scale * (r/2 + x0) of the laser
/// direction vector (k, D), physical units.
double laser_offset(const Calibration& calib);

/// theta = 90 deg - acos(k / sqrt(k^2 + D^2)). Always in (-90, 90).
Angle laser_angle(const Calibration& calib);

struct RotatedPoint {
    std::size_t row = 0;
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const RotatedPoint&, const RotatedPoint&) = default;
};

/// Maps each sample (x, y) to (x cos theta, y sin theta).
///
/// Note this is not an orthogonal rotation: the formula scales the two axes
/// independently. It is kept exactly as the reconstruction model defines it.
/// Output is in the curve's (pixel) units. Throws EmptyScan on an empty curve.
std::vector<RotatedPoint> rotate(const Curve2D& curve, Angle theta);

/// Multiplies both coordinates by `factor` (pixel -> physical conversion).
std::vector<RotatedPoint> scale(std::span<const RotatedPoint> points, double factor);

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Point3&, const Point3&) = default;
};

/// (x, y) -> (x0', y, D - (x - x0')) with x0' the minimum x of the input.
/// Throws EmptyScan on empty input.
std::vector<Point3> project_t2(std::span<const RotatedPoint> rotated, double D);

} // namespace linescan
