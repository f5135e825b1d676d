#pragma once

// Reference implementations used only by tests. They deliberately avoid the
// library's code paths so the checks stay independent.

#include "linescan/geometry.hpp"
#include "linescan/imaging.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

inline HighPrecision pi()
{
    return boost::multiprecision::atan(HighPrecision(1)) * 4;
}

/// theta = 90 - acos(k / sqrt(k^2 + D^2)) in degrees, 50 digits.
inline double laser_angle_deg(const HighPrecision& k, const HighPrecision& D)
{
    using boost::multiprecision::acos;
    using boost::multiprecision::sqrt;
    const HighPrecision theta = 90 - acos(k / sqrt(k * k + D * D)) * 180 / pi();
    return static_cast<double>(theta);
}

inline double tan_deg(const HighPrecision& degrees)
{
    return static_cast<double>(boost::multiprecision::tan(degrees * pi() / 180));
}

inline double sin_deg(const HighPrecision& degrees)
{
    return static_cast<double>(boost::multiprecision::sin(degrees * pi() / 180));
}

inline double cos_deg(const HighPrecision& degrees)
{
    return static_cast<double>(boost::multiprecision::cos(degrees * pi() / 180));
}

/// Row -> mean lit column by a naive double loop over the raw frame.
/// Ascending-column summation, as the library promises.
inline std::map<std::size_t, double> naive_row_means(const linescan::Frame& frame, int alpha)
{
    std::map<std::size_t, double> means;
    for (std::size_t y = 0; y < frame.height(); ++y) {
        double sum = 0.0;
        int count = 0;
        for (std::size_t x = 0; x < frame.width(); ++x) {
            const int red = frame.pixels()[y * frame.width() + x].r;
            const int thresholded = red >= alpha ? 255 : 0;
            if (thresholded == 255) {
                sum += static_cast<double>(x);
                ++count;
            }
        }
        if (count > 0) {
            means[y] = sum / count;
        }
    }
    return means;
}

/// Mean distance to the k nearest other points via full sort per point.
inline std::vector<double> knn_mean_distances(const std::vector<linescan::Point3>& pts,
                                              std::size_t k)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<double> d;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i != j) {
                d.push_back(std::sqrt((pts[i].x - pts[j].x) * (pts[i].x - pts[j].x)
                                      + (pts[i].y - pts[j].y) * (pts[i].y - pts[j].y)
                                      + (pts[i].z - pts[j].z) * (pts[i].z - pts[j].z)));
            }
        }
        std::sort(d.begin(), d.end());
        double sum = 0.0;
        for (std::size_t n = 0; n < k; ++n) {
            sum += d[n];
        }
        out.push_back(sum / static_cast<double>(k));
    }
    return out;
}

/// Indices whose mean kNN distance exceeds mean + m * (population) stddev.
inline std::vector<std::size_t> sor_outliers(const std::vector<linescan::Point3>& pts,
                                             std::size_t k, double m)
{
    const auto d = knn_mean_distances(pts, k);
    double mean = 0.0;
    for (double v : d) {
        mean += v;
    }
    mean /= static_cast<double>(d.size());
    double var = 0.0;
    for (double v : d) {
        var += (v - mean) * (v - mean);
    }
    const double sd = std::sqrt(var / static_cast<double>(d.size()));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] > mean + m * sd) {
            out.push_back(i);
        }
    }
    return out;
}

/// Random frame with a sprinkling of red values around a threshold.
inline linescan::Frame random_frame(std::mt19937_64& rng, std::size_t max_side = 64)
{
    std::uniform_int_distribution<std::size_t> side(1, max_side);
    std::uniform_int_distribution<int> channel(0, 255);
    const std::size_t w = side(rng);
    const std::size_t h = side(rng);
    std::vector<linescan::Rgb> px(w * h);
    for (auto& p : px) {
        p = linescan::Rgb{static_cast<std::uint8_t>(channel(rng)),
                          static_cast<std::uint8_t>(channel(rng)),
                          static_cast<std::uint8_t>(channel(rng))};
    }
    return linescan::Frame(w, h, std::move(px));
}

/// Distance in units in the last place between two doubles.
inline std::uint64_t ulp_distance(double a, double b)
{
    if (a == b) {
        return 0;
    }
    auto key = [](double v) {
        std::int64_t i;
        std::memcpy(&i, &v, sizeof v);
        return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
    };
    const std::int64_t ka = key(a);
    const std::int64_t kb = key(b);
    return ka > kb ? static_cast<std::uint64_t>(ka - kb) : static_cast<std::uint64_t>(kb - ka);
}

} // namespace oracle
