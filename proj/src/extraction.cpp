#include "linescan/extraction.hpp"

#include "linescan/error.hpp"

#include <algorithm>
#include <string>

namespace linescan {

PointSet2D::PointSet2D(std::size_t width, std::size_t height, std::vector<Pixel> points)
    : width_(width), height_(height), points_(std::move(points))
{
    for (const Pixel& p : points_) {
        if (p.x >= width_ || p.y >= height_) {
            throw Error(ErrorCode::InvalidFrame,
                        "point (" + std::to_string(p.x) + ", " + std::to_string(p.y)
                            + ") outside " + std::to_string(width_) + "x"
                            + std::to_string(height_));
        }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Curve2D::Curve2D(std::size_t width, std::size_t height, std::vector<CurveSample> samples)
    : width_(width), height_(height), samples_(std::move(samples))
{
    std::sort(samples_.begin(), samples_.end(),
              [](const CurveSample& a, const CurveSample& b) { return a.row < b.row; });
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (samples_[i].row >= height_ || (i > 0 && samples_[i].row == samples_[i - 1].row)) {
            throw Error(ErrorCode::InvalidFrame,
                        "curve sample row " + std::to_string(samples_[i].row)
                            + " out of range or duplicated");
        }
    }
}

PointSet2D extract_pointset(const BinaryImage& binary)
{
    std::vector<Pixel> points;
    const auto& mask = binary.mask();
    for (std::size_t y = 0; y < binary.height(); ++y) {
        for (std::size_t x = 0; x < binary.width(); ++x) {
            if (mask[y * binary.width() + x]) {
                points.push_back(Pixel{x, y});
            }
        }
    }
    return PointSet2D(binary.width(), binary.height(), std::move(points));
}

Curve2D t1_smooth(const PointSet2D& points)
{
    if (points.empty()) {
        throw Error(ErrorCode::EmptyScan, "no lit pixels to smooth");
    }

    // Points are sorted row-major, so each row is a contiguous run with
    // ascending columns.
    std::vector<CurveSample> samples;
    const auto pts = points.points();
    std::size_t i = 0;
    while (i < pts.size()) {
        const std::size_t row = pts[i].y;
        double sum = 0.0;
        std::size_t count = 0;
        for (; i < pts.size() && pts[i].y == row; ++i) {
            sum += static_cast<double>(pts[i].x);
            ++count;
        }
        samples.push_back(CurveSample{row, sum / static_cast<double>(count)});
    }
    return Curve2D(points.width(), points.height(), std::move(samples));
}

Curve2D extract_curve(const Frame& frame, int alpha)
{
    check_alpha(alpha);
    std::vector<CurveSample> samples;
    const auto level = static_cast<std::uint8_t>(alpha);
    for (std::size_t y = 0; y < frame.height(); ++y) {
        const auto row = frame.row(y);
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t x = 0; x < row.size(); ++x) {
            if (row[x].r >= level) {
                sum += static_cast<double>(x);
                ++count;
            }
        }
        if (count > 0) {
            samples.push_back(CurveSample{y, sum / static_cast<double>(count)});
        }
    }
    return Curve2D(frame.width(), frame.height(), std::move(samples));
}

} // namespace linescan
