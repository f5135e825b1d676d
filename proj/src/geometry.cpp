#include "linescan/geometry.hpp"

#include "linescan/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace linescan {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw Error(ErrorCode::InvalidCalibration, message);
    }
}

struct SinCos {
    double sin;
    double cos;
};

// Reduces to [-45, 45] degrees before converting, so multiples of 90 degrees
// give exact zeros and ones.
SinCos sincos_degrees(double degrees)
{
    const double quadrant = std::nearbyint(degrees / 90.0);
    const double rad = (degrees - 90.0 * quadrant) / kDegPerRad;
    const double s = std::sin(rad);
    const double c = std::cos(rad);
    switch (static_cast<long long>(std::fmod(quadrant, 4.0) + 4.0) % 4) {
    case 0: return {s, c};
    case 1: return {c, -s};
    case 2: return {-s, -c};
    default: return {-c, s};
    }
}

} // namespace

void Calibration::validate() const
{
    require(std::isfinite(s) && s > 0.0, "calibration: s must be > 0, got " + std::to_string(s));
    require(std::isfinite(D) && D > 0.0, "calibration: D must be > 0, got " + std::to_string(D));
    require(std::isfinite(pixel_scale) && pixel_scale > 0.0,
            "calibration: pixel_scale must be > 0, got " + std::to_string(pixel_scale));
    require(std::isfinite(r), "calibration: r must be finite");
    require(std::isfinite(x0), "calibration: x0 must be finite");
}

double Angle::radians() const noexcept
{
    return degrees / kDegPerRad;
}

double laser_offset(const Calibration& calib)
{
    calib.validate();
    return calib.s - calib.pixel_scale * (calib.r / 2.0 + calib.x0);
}

Angle laser_angle(const Calibration& calib)
{
    const double k = laser_offset(calib);
    const double D = calib.D;
    // |k| / hypot(k, D) < 1 for D > 0; clamp only guards the last ulp.
    const double cosine = std::clamp(k / std::hypot(k, D), -1.0, 1.0);
    return Angle{90.0 - std::acos(cosine) * kDegPerRad};
}

std::vector<RotatedPoint> rotate(const Curve2D& curve, Angle theta)
{
    if (curve.empty()) {
        throw Error(ErrorCode::EmptyScan, "cannot rotate an empty curve");
    }
    const auto [s, c] = sincos_degrees(theta.degrees);
    std::vector<RotatedPoint> out;
    out.reserve(curve.size());
    for (const CurveSample& sample : curve.samples()) {
        out.push_back(RotatedPoint{sample.row, sample.x * c, static_cast<double>(sample.row) * s});
    }
    return out;
}

std::vector<RotatedPoint> scale(std::span<const RotatedPoint> points, double factor)
{
    std::vector<RotatedPoint> out(points.begin(), points.end());
    for (RotatedPoint& p : out) {
        p.x *= factor;
        p.y *= factor;
    }
    return out;
}

std::vector<Point3> project_t2(std::span<const RotatedPoint> rotated, double D)
{
    if (rotated.empty()) {
        throw Error(ErrorCode::EmptyScan, "cannot project an empty curve");
    }
    const double x_min =
        std::min_element(rotated.begin(), rotated.end(), [](const auto& a, const auto& b) {
            return a.x < b.x;
        })->x;
    std::vector<Point3> out;
    out.reserve(rotated.size());
    for (const RotatedPoint& p : rotated) {
        out.push_back(Point3{x_min, p.y, D - (p.x - x_min)});
    }
    return out;
}

} // namespace linescan
