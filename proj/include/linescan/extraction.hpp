#pragma once

#include "linescan/imaging.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace linescan {

struct Pixel {
    std::size_t x = 0; ///< column
    std::size_t y = 0; ///< row

    friend auto operator<=>(const Pixel& a, const Pixel& b) noexcept
    {
        // row-major: row first, then ascending column
        if (auto c = a.y <=> b.y; c != 0) {
            return c;
        }
        return a.x <=> b.x;
    }
    friend bool operator==(const Pixel&, const Pixel&) = default;
};

/// Lit pixels of a thresholded frame. Stored sorted row-major without
/// duplicates, so enumeration order of the input never matters.
class PointSet2D {
public:
    PointSet2D() = default;
    /// Throws InvalidFrame if any point lies outside width x height.
    PointSet2D(std::size_t width, std::size_t height, std::vector<Pixel> points);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::span<const Pixel> points() const noexcept { return points_; }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

    friend bool operator==(const PointSet2D&, const PointSet2D&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<Pixel> points_;
};

struct CurveSample {
    std::size_t row = 0;
    double x = 0.0; ///< mean lit column of the row, never rounded

    friend bool operator==(const CurveSample&, const CurveSample&) = default;
};

/// Smoothed laser profile: at most one sample per row, ascending by row.
/// Rows without lit pixels carry no sample.
class Curve2D {
public:
    Curve2D() = default;
    Curve2D(std::size_t width, std::size_t height, std::vector<CurveSample> samples);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::span<const CurveSample> samples() const noexcept { return samples_; }
    [[nodiscard]] bool empty() const noexcept { return samples_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }

    friend bool operator==(const Curve2D&, const Curve2D&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<CurveSample> samples_;
};

PointSet2D extract_pointset(const BinaryImage& binary);

/// Row-mean smoothing: sample(y) is the mean column of row y's lit pixels,
/// summed in ascending column order. Throws EmptyScan on an empty set.
Curve2D t1_smooth(const PointSet2D& points);

/// Fused red channel -> threshold -> point set -> row mean in one pass over
/// the frame. Produces exactly the same Curve2D as the staged path; an
/// unlit frame yields an empty curve instead of throwing.
Curve2D extract_curve(const Frame& frame, int alpha);

} // namespace linescan
