#pragma once

#include "linescan/cloud.hpp"
#include "linescan/extraction.hpp"
#include "linescan/geometry.hpp"
#include "linescan/imaging.hpp"

#include <span>
#include <string>
#include <vector>

namespace linescan {

/// Curve of one frame -> 3D points: rotate by theta, scale pixels to physical
/// units, project against D. Throws EmptyScan on an empty curve.
std::vector<Point3> curve_to_points(const Curve2D& curve, const Calibration& calib, Angle theta);

/// Full per-frame path: red channel, threshold, row mean, rotate, scale, T2.
/// Throws EmptyScan when no pixel reaches alpha.
std::vector<Point3> reconstruct_frame(const Frame& frame, const Calibration& calib, int alpha,
                                      Angle theta);

/// Reconstructs every frame and assembles them in order. EmptyScan messages
/// name the offending frame index.
PointCloud reconstruct_scan(std::span<const Frame> frames, const Calibration& calib, int alpha,
                            const SweepConfig& sweep, std::string units = "mm");

} // namespace linescan
