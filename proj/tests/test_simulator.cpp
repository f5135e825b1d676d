#include "linescan/error.hpp"
#include "linescan/simulator.hpp"

#include <doctest.h>

#include <cmath>

using namespace linescan;

namespace {

const Calibration kCalib{150.0, 500.0, 240.0, 0.0, 1.0};
const CameraModel kCamera{64, 20, 10};

Scene constant(double h)
{
    return Scene::from_function(11, 11, 1.0, 500.0, [h](double, double) { return h; });
}

Scene ramp(double slope)
{
    // Height rises with y; sampled exactly on grid nodes so bilinear is exact.
    return Scene::from_function(11, 11, 1.0, 500.0, [slope](double, double y) { return slope * y; });
}

std::vector<std::size_t> lit_columns(const Frame& f)
{
    std::vector<std::size_t> cols;
    for (std::size_t y = 0; y < f.height(); ++y) {
        std::size_t count = 0;
        for (std::size_t x = 0; x < f.width(); ++x) {
            const Rgb& p = f.at(x, y);
            if (p.r != 0 || p.g != 0 || p.b != 0) {
                CHECK(p == Rgb{255, 0, 0});
                cols.push_back(x);
                ++count;
            }
        }
        CHECK(count == 1);
    }
    return cols;
}

} // namespace

TEST_CASE("scene validation")
{
    CHECK_THROWS_AS(Scene(1, 2, 1.0, 10.0, {0, 0}), Error);
    CHECK_THROWS_AS(Scene(2, 2, 0.0, 10.0, {0, 0, 0, 0}), Error);
    CHECK_THROWS_AS(Scene(2, 2, 1.0, 10.0, {0, 0, 0, 10}), Error);
    CHECK_THROWS_AS(Scene(2, 2, 1.0, 10.0, {0, 0, -1, 0}), Error);
    CHECK_THROWS_AS(Scene(2, 2, 1.0, 10.0, {0, 0, 0}), Error);
    CHECK_NOTHROW(Scene(2, 2, 1.0, 10.0, {0, 0, 0, 9.99}));
}

TEST_CASE("scene height interpolates bilinearly")
{
    const Scene s(2, 2, 2.0, 10.0, {0, 2, 4, 6});
    CHECK(s.extent_x() == 2.0);
    CHECK(s.height_at(0, 0) == 0.0);
    CHECK(s.height_at(2, 2) == 6.0);
    CHECK(s.height_at(1, 1) == doctest::Approx(3.0));
    CHECK(s.height_at(2, 0) == 2.0);
    CHECK(s.height_at(-5, 100) == 4.0); // clamped
}

TEST_CASE("scene file parsing")
{
    const Scene s = parse_scene("3 2 0.5 100\n0 1 2\n3 4 5\n");
    CHECK(s.columns() == 3);
    CHECK(s.rows() == 2);
    CHECK(s.cell_size() == 0.5);
    CHECK(s.background_distance() == 100.0);
    CHECK(s.grid_height(2, 1) == 5.0);

    CHECK_THROWS_AS(parse_scene(""), Error);
    CHECK_THROWS_AS(parse_scene("3 2 0.5\n"), Error);
    CHECK_THROWS_AS(parse_scene("3 2 0.5 100\n0 1 2\n"), Error);
    CHECK_THROWS_AS(parse_scene("3 2 0.5 100\n0 1 2\n3 4\n"), Error);
    CHECK_THROWS_AS(parse_scene("3 2 0.5 100\n0 1 2\n3 x 5\n"), Error);
    try {
        (void)parse_scene("2 2 1 10\n0 0\n0 10\n");
        FAIL("height equal to D must be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidScene);
    }
}

TEST_CASE("flat scene draws a vertical line at the baseline")
{
    const Frame f = render_frame(constant(0.0), kCalib, kCamera, 5.0);
    for (std::size_t c : lit_columns(f)) {
        CHECK(c == kCamera.baseline_column);
    }
}

TEST_CASE("constant height shifts the line by round(h / pixel_scale)")
{
    const Frame f = render_frame(constant(7.4), kCalib, kCamera, 5.0);
    for (std::size_t c : lit_columns(f)) {
        CHECK(c == kCamera.baseline_column + 7);
    }
    Calibration half = kCalib;
    half.pixel_scale = 0.5;
    const Frame g = render_frame(constant(7.4), half, kCamera, 5.0);
    for (std::size_t c : lit_columns(g)) {
        CHECK(c == kCamera.baseline_column + 15);
    }
}

TEST_CASE("ramp scene columns follow the per-row height")
{
    const double slope = 3.3;
    const Scene s = ramp(slope);
    const Frame f = render_frame(s, kCalib, kCamera, 2.0);
    const auto cols = lit_columns(f);
    REQUIRE(cols.size() == kCamera.height);
    for (std::size_t row = 0; row < cols.size(); ++row) {
        const double y = static_cast<double>(row) * 10.0 / 19.0;
        const double expected = 10.0 + std::round(slope * y);
        CHECK(static_cast<double>(cols[row]) == expected);
    }
}

TEST_CASE("render errors")
{
    try {
        (void)render_frame(constant(0.0), kCalib, kCamera, 10.5);
        FAIL("expected LaserOutOfScene");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LaserOutOfScene);
    }
    CHECK_THROWS_AS(render_frame(constant(0.0), kCalib, kCamera, -0.1), Error);
    CHECK_NOTHROW(render_frame(constant(0.0), kCalib, kCamera, 10.0));
    try {
        (void)render_frame(constant(60.0), kCalib, kCamera, 1.0);
        FAIL("line beyond the frame must fail");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidScene);
    }
}

TEST_CASE("render is deterministic")
{
    const RenderOptions noisy{1.5, 0.05, 42};
    CHECK(render_frame(ramp(2.0), kCalib, kCamera, 3.0, noisy)
          == render_frame(ramp(2.0), kCalib, kCamera, 3.0, noisy));
    CHECK(render_frame(ramp(2.0), kCalib, kCamera, 3.0)
          == render_frame(ramp(2.0), kCalib, kCamera, 3.0));
}

TEST_CASE("blur spreads red around the line and noise adds stray pixels")
{
    const Frame blurred = render_frame(constant(0.0), kCalib, kCamera, 1.0, {1.0, 0.0, 0});
    CHECK(blurred.at(10, 0).r == 255);
    CHECK(blurred.at(9, 0).r == std::lround(255.0 * std::exp(-0.5)));
    CHECK(blurred.at(11, 0).r == blurred.at(9, 0).r);
    CHECK(blurred.at(14, 0).r == 0);

    const Frame noisy = render_frame(constant(0.0), kCalib, kCamera, 1.0, {0.0, 0.2, 9});
    std::size_t white = 0;
    for (const Rgb& p : noisy.pixels()) {
        white += p == Rgb{255, 255, 255} ? 1 : 0;
    }
    CHECK(white > 0);
}

TEST_CASE("render_sweep advances the laser by D tan(dtheta)")
{
    const Scene s = ramp(1.5);
    const SweepConfig one{1.0, 1, std::nullopt};
    const auto single = render_sweep(s, kCalib, kCamera, one, 2.0);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == render_frame(s, kCalib, kCamera, 2.0));

    const SweepConfig ten{0.1, 10, std::nullopt};
    const auto frames = render_sweep(s, kCalib, kCamera, ten, 0.5);
    REQUIRE(frames.size() == 10);
    const double step = 500.0 * std::tan(0.1 * 3.14159265358979323846 / 180.0);
    for (std::size_t k = 0; k < frames.size(); ++k) {
        CHECK(frames[k] == render_frame(s, kCalib, kCamera, 0.5 + static_cast<double>(k) * step));
    }

    const auto flat = render_sweep(constant(0.0), kCalib, kCamera, ten, 0.0);
    for (const Frame& f : flat) {
        CHECK(f == flat.front());
    }

    CHECK_THROWS_AS(render_sweep(s, kCalib, kCamera, SweepConfig{1.0, 5, 3.0}, 0.0), Error);
}

TEST_CASE("ground truth of a flat scene sits at D")
{
    const SweepConfig sweep{0.2, 4, std::nullopt};
    const PointCloud t = ground_truth(constant(0.0), kCalib, kCamera, sweep, 1.0);
    CHECK(t.size() == 4 * kCamera.height);
    for (const Point3& p : t.points()) {
        CHECK(p.z == 500.0);
    }
}

TEST_CASE("ground truth of a ramp is linear in the row")
{
    const SweepConfig sweep{0.2, 2, std::nullopt};
    const double slope = 2.0;
    const PointCloud t = ground_truth(ramp(slope), kCalib, kCamera, sweep, 1.0);
    const double theta = laser_angle(kCalib).radians();
    // z = D - cos(theta) * slope * y_row with y_row = row * extent / (height - 1)
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t row = 0; row < kCamera.height; ++row) {
            const Point3& p = t.points()[k * kCamera.height + row];
            const double y = static_cast<double>(row) * 10.0 / 19.0;
            CHECK(p.z == doctest::Approx(500.0 - std::cos(theta) * slope * y).epsilon(1e-12));
            CHECK(p.y == doctest::Approx(static_cast<double>(row) * std::sin(theta)));
        }
    }
}

TEST_CASE("uniform height appears in X, not z")
{
    const SweepConfig sweep{0.2, 1, std::nullopt};
    const PointCloud flat = ground_truth(constant(0.0), kCalib, kCamera, sweep, 1.0);
    const PointCloud raised = ground_truth(constant(10.0), kCalib, kCamera, sweep, 1.0);
    const double cos_t = std::cos(laser_angle(kCalib).radians());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        CHECK(raised.points()[i].z == 500.0);
        CHECK(raised.points()[i].x - flat.points()[i].x == doctest::Approx(10.0 * cos_t));
    }
}
