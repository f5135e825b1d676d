#pragma once

#include "linescan/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linescan {

/// Ordered (frame-major, then row-ascending) list of finite 3D points.
class PointCloud {
public:
    PointCloud() = default;
    /// Throws InvalidCloud if any coordinate is NaN or infinite.
    explicit PointCloud(std::vector<Point3> points, std::string units = "mm");

    [[nodiscard]] std::span<const Point3> points() const noexcept { return points_; }
    [[nodiscard]] const std::string& units() const noexcept { return units_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::vector<Point3> points_;
    std::string units_ = "mm";
};

/// Laser sweep: angular advance per frame and number of frames.
struct SweepConfig {
    double delta_theta = 0.0; ///< degrees per frame, > 0
    std::size_t frame_count = 1;
    std::optional<double> frame_step_override; ///< physical X advance per frame

    /// Throws InvalidCalibration on delta_theta <= 0, frame_count == 0 or a
    /// non-finite override.
    void validate() const;
};

/// Lateral advance between frames: the override if set, else D * tan(delta_theta).
double sweep_step(const SweepConfig& sweep, double D);

/// Rotation (degrees, composed as Rz * Ry * Rx) followed by translation.
struct RigidTransform {
    double rx = 0.0;
    double ry = 0.0;
    double rz = 0.0;
    double tx = 0.0;
    double ty = 0.0;
    double tz = 0.0;

    static RigidTransform identity() { return {}; }
    [[nodiscard]] Point3 apply(const Point3& p) const;
};

/// Offsets frame k's points by k * sweep_step along X and concatenates
/// frame-major. Throws FrameCountMismatch or EmptyScan.
PointCloud assemble(std::span<const std::vector<Point3>> frame_curves, const SweepConfig& sweep,
                    double D, std::string units = "mm");

inline constexpr std::size_t kDefaultNeighbors = 8;
inline constexpr double kDefaultSigmaMult = 2.0;

/// Mean distance from each point to its k nearest neighbours (self excluded),
/// by exhaustive search.
std::vector<double> mean_neighbor_distances(const PointCloud& cloud, std::size_t k_neighbors);

/// Statistical outlier removal. Drops points whose mean kNN distance exceeds
/// mean + sigma_mult * stddev over the cloud; survivors keep their order.
/// Throws TooFewPoints when the cloud has <= k_neighbors points.
PointCloud denoise(const PointCloud& cloud, std::size_t k_neighbors = kDefaultNeighbors,
                   double sigma_mult = kDefaultSigmaMult);

/// Indices kept by denoise, ascending.
std::vector<std::size_t> denoise_inliers(const PointCloud& cloud, std::size_t k_neighbors,
                                         double sigma_mult);

/// a followed by transform(b). Throws UnitMismatch when unit labels differ.
PointCloud merge(const PointCloud& a, const PointCloud& b, const RigidTransform& transform);

} // namespace linescan
