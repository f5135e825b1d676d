#include "linescan/cloud.hpp"

#include "linescan/error.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace linescan {

namespace {

bool finite(const Point3& p)
{
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

double to_radians(double degrees)
{
    return degrees * std::numbers::pi / 180.0;
}

} // namespace

PointCloud::PointCloud(std::vector<Point3> points, std::string units)
    : points_(std::move(points)), units_(std::move(units))
{
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!finite(points_[i])) {
            throw Error(ErrorCode::InvalidCloud,
                        "point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
}

void SweepConfig::validate() const
{
    if (!(std::isfinite(delta_theta) && delta_theta > 0.0)) {
        throw Error(ErrorCode::InvalidCalibration, "sweep: delta_theta must be > 0");
    }
    if (frame_count == 0) {
        throw Error(ErrorCode::InvalidCalibration, "sweep: frame_count must be >= 1");
    }
    if (frame_step_override && !std::isfinite(*frame_step_override)) {
        throw Error(ErrorCode::InvalidCalibration, "sweep: frame step must be finite");
    }
}

double sweep_step(const SweepConfig& sweep, double D)
{
    sweep.validate();
    if (sweep.frame_step_override) {
        return *sweep.frame_step_override;
    }
    return D * std::tan(to_radians(sweep.delta_theta));
}

namespace {

Eigen::Affine3d to_affine(const RigidTransform& t)
{
    Eigen::Affine3d affine = Eigen::Affine3d::Identity();
    affine.translate(Eigen::Vector3d(t.tx, t.ty, t.tz));
    affine.rotate(Eigen::AngleAxisd(to_radians(t.rz), Eigen::Vector3d::UnitZ())
                  * Eigen::AngleAxisd(to_radians(t.ry), Eigen::Vector3d::UnitY())
                  * Eigen::AngleAxisd(to_radians(t.rx), Eigen::Vector3d::UnitX()));
    return affine;
}

Point3 apply_affine(const Eigen::Affine3d& affine, const Point3& p)
{
    const Eigen::Vector3d out = affine * Eigen::Vector3d(p.x, p.y, p.z);
    return Point3{out.x(), out.y(), out.z()};
}

} // namespace

Point3 RigidTransform::apply(const Point3& p) const
{
    return apply_affine(to_affine(*this), p);
}

PointCloud assemble(std::span<const std::vector<Point3>> frame_curves, const SweepConfig& sweep,
                    double D, std::string units)
{
    const double step = sweep_step(sweep, D);
    if (frame_curves.size() != sweep.frame_count) {
        throw Error(ErrorCode::FrameCountMismatch,
                    "expected " + std::to_string(sweep.frame_count) + " frames, got "
                        + std::to_string(frame_curves.size()));
    }

    std::vector<Point3> points;
    for (std::size_t k = 0; k < frame_curves.size(); ++k) {
        if (frame_curves[k].empty()) {
            throw Error(ErrorCode::EmptyScan, "frame " + std::to_string(k) + " has no points");
        }
        const double offset = static_cast<double>(k) * step;
        for (Point3 p : frame_curves[k]) {
            p.x += offset;
            points.push_back(p);
        }
    }
    return PointCloud(std::move(points), std::move(units));
}

std::vector<double> mean_neighbor_distances(const PointCloud& cloud, std::size_t k_neighbors)
{
    const auto pts = cloud.points();
    const std::size_t n = pts.size();
    if (k_neighbors == 0 || n <= k_neighbors) {
        throw Error(ErrorCode::TooFewPoints,
                    "denoise needs more than k=" + std::to_string(k_neighbors) + " points, got "
                        + std::to_string(n));
    }

    std::vector<double> result(n);
    std::vector<double> dist2;
    dist2.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        dist2.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            const double dx = pts[i].x - pts[j].x;
            const double dy = pts[i].y - pts[j].y;
            const double dz = pts[i].z - pts[j].z;
            dist2.push_back(dx * dx + dy * dy + dz * dz);
        }
        const auto kth = dist2.begin() + static_cast<std::ptrdiff_t>(k_neighbors);
        std::nth_element(dist2.begin(), kth - 1, dist2.end());
        std::sort(dist2.begin(), kth);
        double sum = 0.0;
        for (auto it = dist2.begin(); it != kth; ++it) {
            sum += std::sqrt(*it);
        }
        result[i] = sum / static_cast<double>(k_neighbors);
    }
    return result;
}

std::vector<std::size_t> denoise_inliers(const PointCloud& cloud, std::size_t k_neighbors,
                                         double sigma_mult)
{
    if (!(sigma_mult > 0.0)) {
        throw Error(ErrorCode::InvalidCloud, "sigma multiplier must be > 0");
    }
    const std::vector<double> d = mean_neighbor_distances(cloud, k_neighbors);
    const double n = static_cast<double>(d.size());
    const double mean = std::accumulate(d.begin(), d.end(), 0.0) / n;
    double var = 0.0;
    for (double v : d) {
        var += (v - mean) * (v - mean);
    }
    const double stddev = std::sqrt(var / n);
    const double limit = mean + sigma_mult * stddev;

    std::vector<std::size_t> kept;
    kept.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!(d[i] > limit)) {
            kept.push_back(i);
        }
    }
    return kept;
}

PointCloud denoise(const PointCloud& cloud, std::size_t k_neighbors, double sigma_mult)
{
    const auto kept = denoise_inliers(cloud, k_neighbors, sigma_mult);
    std::vector<Point3> points;
    points.reserve(kept.size());
    for (std::size_t i : kept) {
        points.push_back(cloud.points()[i]);
    }
    return PointCloud(std::move(points), cloud.units());
}

PointCloud merge(const PointCloud& a, const PointCloud& b, const RigidTransform& transform)
{
    if (a.units() != b.units()) {
        throw Error(ErrorCode::UnitMismatch,
                    "cannot merge clouds in '" + a.units() + "' and '" + b.units() + "'");
    }
    std::vector<Point3> points(a.points().begin(), a.points().end());
    points.reserve(a.size() + b.size());
    const Eigen::Affine3d affine = to_affine(transform);
    for (const Point3& p : b.points()) {
        points.push_back(apply_affine(affine, p));
    }
    return PointCloud(std::move(points), a.units());
}

} // namespace linescan
