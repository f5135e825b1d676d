#include "linescan/simulator.hpp"

#include "linescan/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace linescan {

namespace {

[[noreturn]] void scene_error(const std::string& message)
{
    throw Error(ErrorCode::InvalidScene, message);
}

double row_to_scene_y(const Scene& scene, const CameraModel& camera, std::size_t row)
{
    if (camera.height < 2) {
        return 0.0;
    }
    return static_cast<double>(row) * scene.extent_y() / static_cast<double>(camera.height - 1);
}

void check_camera(const CameraModel& camera)
{
    if (camera.width == 0 || camera.height == 0 || camera.baseline_column >= camera.width) {
        scene_error("camera: baseline column must lie inside a non-empty frame");
    }
}

void check_laser(const Scene& scene, double laser_x)
{
    // Small slack so accumulated sweep steps ending exactly on the edge pass.
    const double slack = 1e-9 * std::max(1.0, scene.extent_x());
    if (!std::isfinite(laser_x) || laser_x < -slack || laser_x > scene.extent_x() + slack) {
        throw Error(ErrorCode::LaserOutOfScene,
                    "laser position " + std::to_string(laser_x) + " outside scene [0, "
                        + std::to_string(scene.extent_x()) + "]");
    }
}

// Column of the line in row `row`, before rounding.
double line_column(const Scene& scene, const Calibration& calib, const CameraModel& camera,
                   double laser_x, std::size_t row)
{
    const double h = scene.height_at(laser_x, row_to_scene_y(scene, camera, row));
    return static_cast<double>(camera.baseline_column) + h / calib.pixel_scale;
}

} // namespace

Scene::Scene(std::size_t columns, std::size_t rows, double cell_size, double background_distance,
             std::vector<double> heights)
    : columns_(columns), rows_(rows), cell_size_(cell_size),
      background_distance_(background_distance), heights_(std::move(heights))
{
    if (columns_ < 2 || rows_ < 2) {
        scene_error("scene grid must be at least 2x2");
    }
    if (!(std::isfinite(cell_size_) && cell_size_ > 0.0)) {
        scene_error("scene cell size must be > 0");
    }
    if (!(std::isfinite(background_distance_) && background_distance_ > 0.0)) {
        scene_error("scene D must be > 0");
    }
    if (heights_.size() != columns_ * rows_) {
        scene_error("scene expects " + std::to_string(columns_ * rows_) + " heights, got "
                    + std::to_string(heights_.size()));
    }
    for (double h : heights_) {
        if (!std::isfinite(h) || h < 0.0 || h >= background_distance_) {
            scene_error("scene height " + std::to_string(h) + " outside [0, D)");
        }
    }
}

Scene Scene::from_function(std::size_t columns, std::size_t rows, double cell_size,
                           double background_distance,
                           const std::function<double(double, double)>& height)
{
    std::vector<double> heights;
    heights.reserve(columns * rows);
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i < columns; ++i) {
            heights.push_back(height(static_cast<double>(i) * cell_size,
                                     static_cast<double>(j) * cell_size));
        }
    }
    return Scene(columns, rows, cell_size, background_distance, std::move(heights));
}

double Scene::extent_x() const noexcept
{
    return static_cast<double>(columns_ - 1) * cell_size_;
}

double Scene::extent_y() const noexcept
{
    return static_cast<double>(rows_ - 1) * cell_size_;
}

double Scene::height_at(double x, double y) const noexcept
{
    const double fx = std::clamp(x / cell_size_, 0.0, static_cast<double>(columns_ - 1));
    const double fy = std::clamp(y / cell_size_, 0.0, static_cast<double>(rows_ - 1));
    const auto i = std::min(static_cast<std::size_t>(fx), columns_ - 2);
    const auto j = std::min(static_cast<std::size_t>(fy), rows_ - 2);
    const double tx = fx - static_cast<double>(i);
    const double ty = fy - static_cast<double>(j);
    const double top = grid_height(i, j) * (1.0 - tx) + grid_height(i + 1, j) * tx;
    const double bottom = grid_height(i, j + 1) * (1.0 - tx) + grid_height(i + 1, j + 1) * tx;
    return top * (1.0 - ty) + bottom * ty;
}

Scene parse_scene(std::string_view text)
{
    std::vector<std::vector<std::string_view>> lines;
    std::vector<std::size_t> line_numbers;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        std::vector<std::string_view> fields;
        std::size_t p = 0;
        while ((p = line.find_first_not_of(" \t\r", p)) != std::string_view::npos) {
            const std::size_t e = std::min(line.find_first_of(" \t\r", p), line.size());
            fields.push_back(line.substr(p, e - p));
            p = e;
        }
        if (!fields.empty()) {
            lines.push_back(std::move(fields));
            line_numbers.push_back(line_no);
        }
    }

    auto fail = [&](std::size_t idx, const std::string& message) -> void {
        const std::size_t n = idx < line_numbers.size() ? line_numbers[idx] : line_no + 1;
        throw Error(ErrorCode::ParseError, "scene line " + std::to_string(n) + ": " + message);
    };
    auto number = [&](std::string_view field, std::size_t idx) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            fail(idx, "invalid number '" + std::string(field) + "'");
        }
        return v;
    };
    auto count = [&](std::string_view field, std::size_t idx) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            fail(idx, "invalid count '" + std::string(field) + "'");
        }
        return v;
    };

    if (lines.empty()) {
        fail(0, "missing header 'width height cell_size D'");
    }
    if (lines[0].size() != 4) {
        fail(0, "header must be 'width height cell_size D'");
    }
    const std::size_t width = count(lines[0][0], 0);
    const std::size_t height = count(lines[0][1], 0);
    const double cell = number(lines[0][2], 0);
    const double D = number(lines[0][3], 0);
    if (lines.size() != height + 1) {
        fail(std::min(lines.size(), height + 1),
             "expected " + std::to_string(height) + " height rows, got "
                 + std::to_string(lines.size() - 1));
    }
    std::vector<double> heights;
    heights.reserve(width * height);
    for (std::size_t r = 1; r <= height; ++r) {
        if (lines[r].size() != width) {
            fail(r, "expected " + std::to_string(width) + " values, got "
                        + std::to_string(lines[r].size()));
        }
        for (std::string_view f : lines[r]) {
            heights.push_back(number(f, r));
        }
    }
    return Scene(width, height, cell, D, std::move(heights));
}

Frame render_frame(const Scene& scene, const Calibration& calib, const CameraModel& camera,
                   double laser_x, const RenderOptions& options)
{
    calib.validate();
    check_camera(camera);
    check_laser(scene, laser_x);

    std::vector<Rgb> pixels(camera.width * camera.height);
    for (std::size_t row = 0; row < camera.height; ++row) {
        const double col = std::round(line_column(scene, calib, camera, laser_x, row));
        if (col < 0.0 || col >= static_cast<double>(camera.width)) {
            scene_error("laser line leaves the frame at row " + std::to_string(row)
                        + " (column " + std::to_string(col) + ")");
        }
        const auto c = static_cast<std::size_t>(col);
        Rgb* line = pixels.data() + row * camera.width;
        line[c] = Rgb{255, 0, 0};

        if (options.blur_sigma > 0.0) {
            const double sigma = options.blur_sigma;
            const auto reach = static_cast<std::ptrdiff_t>(std::ceil(3.0 * sigma));
            for (std::ptrdiff_t d = -reach; d <= reach; ++d) {
                const std::ptrdiff_t x = static_cast<std::ptrdiff_t>(c) + d;
                if (d == 0 || x < 0 || x >= static_cast<std::ptrdiff_t>(camera.width)) {
                    continue;
                }
                const double w = std::exp(-static_cast<double>(d * d) / (2.0 * sigma * sigma));
                line[x].r = std::max(line[x].r, static_cast<std::uint8_t>(std::lround(255.0 * w)));
            }
        }
    }

    if (options.noise_fraction > 0.0) {
        std::mt19937_64 rng(options.seed);
        std::bernoulli_distribution hit(std::min(options.noise_fraction, 1.0));
        std::bernoulli_distribution salt(0.5);
        for (Rgb& p : pixels) {
            if (hit(rng)) {
                p = salt(rng) ? Rgb{255, 255, 255} : Rgb{0, 0, 0};
            }
        }
    }
    return Frame(camera.width, camera.height, std::move(pixels));
}

std::vector<double> sweep_positions(const Scene& scene, const SweepConfig& sweep,
                                    double laser_start)
{
    const double step = sweep_step(sweep, scene.background_distance());
    std::vector<double> positions;
    positions.reserve(sweep.frame_count);
    for (std::size_t k = 0; k < sweep.frame_count; ++k) {
        const double x = laser_start + static_cast<double>(k) * step;
        check_laser(scene, x);
        positions.push_back(x);
    }
    return positions;
}

std::vector<Frame> render_sweep(const Scene& scene, const Calibration& calib,
                                const CameraModel& camera, const SweepConfig& sweep,
                                double laser_start, const RenderOptions& options)
{
    const auto positions = sweep_positions(scene, sweep, laser_start);
    std::vector<Frame> frames;
    frames.reserve(positions.size());
    for (std::size_t k = 0; k < positions.size(); ++k) {
        RenderOptions frame_options = options;
        frame_options.seed = options.seed + k;
        frames.push_back(render_frame(scene, calib, camera, positions[k], frame_options));
    }
    return frames;
}

PointCloud ground_truth(const Scene& scene, const Calibration& calib, const CameraModel& camera,
                        const SweepConfig& sweep, double laser_start, std::string units)
{
    calib.validate();
    check_camera(camera);
    const auto positions = sweep_positions(scene, sweep, laser_start);
    const double step = sweep_step(sweep, scene.background_distance());
    const double D = scene.background_distance();
    const double theta = laser_angle(calib).radians();
    const double cos_t = std::cos(theta);
    const double sin_t = std::sin(theta);
    const double ps = calib.pixel_scale;

    std::vector<Point3> points;
    points.reserve(positions.size() * camera.height);
    std::vector<double> xs(camera.height);
    for (std::size_t k = 0; k < positions.size(); ++k) {
        for (std::size_t row = 0; row < camera.height; ++row) {
            xs[row] = ps * line_column(scene, calib, camera, positions[k], row) * cos_t;
        }
        const double x_ref = *std::min_element(xs.begin(), xs.end());
        const double world_x = x_ref + static_cast<double>(k) * step;
        for (std::size_t row = 0; row < camera.height; ++row) {
            points.push_back(Point3{world_x, ps * static_cast<double>(row) * sin_t,
                                    D - (xs[row] - x_ref)});
        }
    }
    return PointCloud(std::move(points), std::move(units));
}

} // namespace linescan
