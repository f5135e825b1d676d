#include "linescan/pipeline.hpp"

#include "linescan/error.hpp"

namespace linescan {

std::vector<Point3> curve_to_points(const Curve2D& curve, const Calibration& calib, Angle theta)
{
    const auto rotated = scale(rotate(curve, theta), calib.pixel_scale);
    return project_t2(rotated, calib.D);
}

std::vector<Point3> reconstruct_frame(const Frame& frame, const Calibration& calib, int alpha,
                                      Angle theta)
{
    const Curve2D curve = extract_curve(frame, alpha);
    if (curve.empty()) {
        throw Error(ErrorCode::EmptyScan,
                    "no pixel reaches threshold " + std::to_string(alpha));
    }
    return curve_to_points(curve, calib, theta);
}

PointCloud reconstruct_scan(std::span<const Frame> frames, const Calibration& calib, int alpha,
                            const SweepConfig& sweep, std::string units)
{
    const Angle theta = laser_angle(calib);
    std::vector<std::vector<Point3>> per_frame;
    per_frame.reserve(frames.size());
    for (std::size_t k = 0; k < frames.size(); ++k) {
        try {
            per_frame.push_back(reconstruct_frame(frames[k], calib, alpha, theta));
        } catch (const Error& e) {
            throw Error(e.code(), "frame " + std::to_string(k) + ": " + e.what());
        }
    }
    return assemble(per_frame, sweep, calib.D, std::move(units));
}

} // namespace linescan
