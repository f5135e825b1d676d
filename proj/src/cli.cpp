#include "linescan/cli.hpp"

#include "linescan/cloud.hpp"
#include "linescan/cloud_io.hpp"
#include "linescan/error.hpp"
#include "linescan/file_util.hpp"
#include "linescan/pipeline.hpp"
#include "linescan/plot.hpp"
#include "linescan/png_io.hpp"
#include "linescan/simulator.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <string>

namespace linescan::cli {

namespace {

namespace fs = std::filesystem;

/// Missing or contradictory command-line input.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string fixed(double v, int digits = 6)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, digits);
    return ec == std::errc() ? std::string(buf.data(), ptr) : std::to_string(v);
}

struct CalibrationFlags {
    std::optional<std::string> file;
    std::optional<double> s;
    std::optional<double> D;
    std::optional<double> r;
    std::optional<double> x0;
    std::optional<double> pixel_scale;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--calib", file, "Calibration file (key = value lines)");
        cmd.add_option("--s", s, "Laser-to-camera baseline (physical units)");
        cmd.add_option("--D", D, "Camera-to-background distance (physical units)");
        cmd.add_option("--r", r, "Camera Y range (pixels)");
        cmd.add_option("--x0", x0, "Minimum X coordinate (pixels)");
        cmd.add_option("--pixel-scale", pixel_scale,
                       "Physical units per pixel (default 1.0)");
    }

    /// File values first, explicit flags override them.
    Calibration resolve(std::optional<double> default_D = std::nullopt) const
    {
        CalibrationFile merged;
        if (file) {
            merged = parse_calibration_file(read_file_text(*file));
        }
        auto pick = [](std::optional<double> flag, std::optional<double> from_file) {
            return flag ? flag : from_file;
        };
        merged.s = pick(s, merged.s);
        merged.D = pick(D, pick(merged.D, default_D));
        merged.r = pick(r, merged.r);
        merged.x0 = pick(x0, merged.x0);
        merged.pixel_scale = pick(pixel_scale, merged.pixel_scale);

        std::string missing;
        auto need = [&](const std::optional<double>& v, const char* name) {
            if (!v) {
                missing += missing.empty() ? name : std::string(", ") + name;
            }
        };
        need(merged.s, "s");
        need(merged.D, "D");
        need(merged.r, "r");
        need(merged.x0, "x0");
        if (!missing.empty()) {
            throw UsageError("missing calibration value(s): " + missing
                             + " (use --calib or the matching flags)");
        }
        Calibration calib{*merged.s, *merged.D, *merged.r, *merged.x0,
                          merged.pixel_scale.value_or(1.0)};
        calib.validate();
        return calib;
    }
};

struct SweepFlags {
    double delta_theta = 0.0;
    std::optional<double> frame_step;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--delta-theta", delta_theta, "Laser angle advance per frame (degrees)")
            ->required();
        cmd.add_option("--frame-step", frame_step,
                       "Override the X advance per frame (physical units)");
    }

    SweepConfig make(std::size_t frames) const
    {
        SweepConfig sweep{delta_theta, frames, frame_step};
        sweep.validate();
        return sweep;
    }
};

CloudFormat output_format(const std::optional<std::string>& flag, const fs::path& out)
{
    if (flag) {
        if (auto f = parse_cloud_format(*flag)) {
            return *f;
        }
        throw UsageError("unknown format '" + *flag + "' (expected xyz, pcd or obj)");
    }
    if (auto f = format_from_path(out)) {
        return *f;
    }
    throw UsageError("cannot infer format from '" + out.string() + "'; pass --format");
}

void add_format_option(CLI::App& cmd, std::optional<std::string>& format)
{
    cmd.add_option("--format", format, "Output format: xyz, pcd or obj (default: extension)")
        ->check(CLI::IsMember({"xyz", "pcd", "obj"}, CLI::ignore_case));
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    std::vector<std::string> inputs;
    std::optional<std::string> manifest;
    std::string output;
    std::optional<std::string> format;
    int alpha = kDefaultAlpha;
    std::string units = "mm";
    CalibrationFlags calib;
    SweepFlags sweep;
};

int cmd_scan(const ScanArgs& args, std::ostream& out)
{
    if (args.manifest && !args.inputs.empty()) {
        throw UsageError("give frames either as arguments or via --manifest, not both");
    }
    std::vector<fs::path> frames;
    if (args.manifest) {
        frames = read_manifest(*args.manifest);
    } else {
        frames = order_frames(std::vector<fs::path>(args.inputs.begin(), args.inputs.end()));
    }
    if (frames.empty()) {
        throw UsageError("no frames to scan");
    }
    const CloudFormat format = output_format(args.format, args.output);
    const Calibration calib = args.calib.resolve();
    const SweepConfig sweep = args.sweep.make(frames.size());
    const Angle theta = laser_angle(calib);

    out << "theta " << fixed(theta.degrees) << " deg, step "
        << fixed(sweep_step(sweep, calib.D)) << " " << args.units << "\n";

    std::vector<std::vector<Point3>> per_frame;
    per_frame.reserve(frames.size());
    for (std::size_t k = 0; k < frames.size(); ++k) {
        const Frame frame = read_png(frames[k]);
        std::vector<Point3> points;
        try {
            points = reconstruct_frame(frame, calib, args.alpha, theta);
        } catch (const Error& e) {
            throw Error(e.code(), frames[k].string() + ": " + e.what());
        }
        const auto [lo, hi] = std::minmax_element(
            points.begin(), points.end(), [](const Point3& a, const Point3& b) { return a.z < b.z; });
        out << "frame " << k << " " << frames[k].filename().string() << ": " << points.size()
            << " rows, z [" << fixed(lo->z) << ", " << fixed(hi->z) << "]\n";
        per_frame.push_back(std::move(points));
    }

    const PointCloud cloud = assemble(per_frame, sweep, calib.D, args.units);
    write_cloud(args.output, cloud, format);
    out << "points " << cloud.size() << " -> " << args.output << " (" << to_string(format)
        << ")\n";
    return kSuccess;
}

struct SimulateArgs {
    std::string scene;
    std::string out_dir;
    std::size_t frames = 1;
    double laser_start = 0.0;
    std::size_t width = 320;
    std::size_t height = 240;
    std::optional<std::size_t> baseline_column;
    double blur = 0.0;
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::string units = "mm";
    CalibrationFlags calib;
    SweepFlags sweep;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out)
{
    const Scene scene = parse_scene(read_file_text(args.scene));
    const Calibration calib = args.calib.resolve(scene.background_distance());
    const SweepConfig sweep = args.sweep.make(args.frames);
    const CameraModel camera{args.width, args.height,
                             args.baseline_column.value_or(args.width / 4)};
    const RenderOptions options{args.blur, args.noise, args.seed};

    const auto frames = render_sweep(scene, calib, camera, sweep, args.laser_start, options);
    const PointCloud truth = ground_truth(scene, calib, camera, sweep, args.laser_start, args.units);

    const fs::path dir(args.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
    }
    for (std::size_t k = 0; k < frames.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04zu.png", k);
        write_png(dir / name, frames[k]);
    }
    write_cloud(dir / "ground_truth.xyz", truth, CloudFormat::Xyz);
    out << "frames " << frames.size() << " (" << camera.width << "x" << camera.height
        << ") -> " << dir.string() << "\n";
    out << "ground truth " << truth.size() << " points -> "
        << (dir / "ground_truth.xyz").string() << "\n";
    return kSuccess;
}

struct DenoiseArgs {
    std::string input;
    std::string output;
    std::size_t k = kDefaultNeighbors;
    double sigma_mult = kDefaultSigmaMult;
    std::optional<std::string> format;
};

int cmd_denoise(const DenoiseArgs& args, std::ostream& out)
{
    const CloudFormat format = output_format(args.format, args.output);
    const PointCloud cloud = read_cloud(args.input);
    const PointCloud cleaned = denoise(cloud, args.k, args.sigma_mult);
    write_cloud(args.output, cleaned, format);
    out << "kept " << cleaned.size() << " of " << cloud.size() << " points ("
        << cloud.size() - cleaned.size() << " removed)\n";
    return kSuccess;
}

struct MergeArgs {
    std::string a;
    std::string b;
    std::string output;
    std::vector<double> rotate{0.0, 0.0, 0.0};
    std::vector<double> translate{0.0, 0.0, 0.0};
    std::string units_a = "mm";
    std::string units_b = "mm";
    std::optional<std::string> format;
};

int cmd_merge(const MergeArgs& args, std::ostream& out)
{
    const CloudFormat format = output_format(args.format, args.output);
    const PointCloud a = read_cloud(args.a, args.units_a);
    const PointCloud b = read_cloud(args.b, args.units_b);
    const RigidTransform t{args.rotate[0],    args.rotate[1],    args.rotate[2],
                           args.translate[0], args.translate[1], args.translate[2]};
    const PointCloud merged = merge(a, b, t);
    write_cloud(args.output, merged, format);
    out << "merged " << a.size() << " + " << b.size() << " = " << merged.size() << " points\n";
    return kSuccess;
}

struct ConvertArgs {
    std::string input;
    std::string output;
    std::optional<std::string> format;
};

int cmd_convert(const ConvertArgs& args, std::ostream& out)
{
    const CloudFormat format = output_format(args.format, args.output);
    const PointCloud cloud = read_cloud(args.input);
    write_cloud(args.output, cloud, format);
    out << "converted " << cloud.size() << " points to " << to_string(format) << "\n";
    return kSuccess;
}

struct PlotArgs {
    std::string input;
    std::string output;
    std::string plane = "XY";
    int size = 800;
};

int cmd_plot(const PlotArgs& args, std::ostream& out)
{
    const auto plane = parse_plane(args.plane);
    if (!plane) {
        throw UsageError("unknown plane '" + args.plane + "' (expected XY, XZ or YZ)");
    }
    const PointCloud cloud = read_cloud(args.input);
    write_file_text(args.output, plot_svg(cloud, *plane, args.size));
    out << "plotted " << cloud.size() << " points (" << args.plane << ") -> " << args.output
        << "\n";
    return kSuccess;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::DecodeError:
    case ErrorCode::ParseError:
        return kIoError;
    default:
        return kPipelineError;
    }
}

} // namespace

CalibrationFile parse_calibration_file(std::string_view text)
{
    CalibrationFile result;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto fail = [&](const std::string& message) {
            throw Error(ErrorCode::ParseError,
                        "calibration line " + std::to_string(line_no) + ": " + message);
        };
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail("expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
            fail("invalid number '" + std::string(value) + "'");
        }
        if (key == "s") {
            result.s = v;
        } else if (key == "D") {
            result.D = v;
        } else if (key == "r") {
            result.r = v;
        } else if (key == "x0") {
            result.x0 = v;
        } else if (key == "pixel_scale") {
            result.pixel_scale = v;
        } else {
            fail("unknown key '" + std::string(key) + "'");
        }
    }
    return result;
}

std::vector<fs::path> order_frames(const std::vector<fs::path>& inputs)
{
    std::vector<fs::path> frames;
    for (const fs::path& input : inputs) {
        std::error_code ec;
        if (fs::is_directory(input, ec)) {
            for (const auto& entry : fs::directory_iterator(input, ec)) {
                std::string ext = entry.path().extension().string();
                std::transform(ext.begin(), ext.end(), ext.begin(),
                               [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
                if (entry.is_regular_file() && ext == ".png") {
                    frames.push_back(entry.path());
                }
            }
            if (ec) {
                throw Error(ErrorCode::IoError, "cannot list " + input.string() + ": " + ec.message());
            }
        } else {
            frames.push_back(input);
        }
    }
    std::sort(frames.begin(), frames.end(), [](const fs::path& a, const fs::path& b) {
        const auto fa = a.filename().string();
        const auto fb = b.filename().string();
        return fa != fb ? fa < fb : a.string() < b.string();
    });
    return frames;
}

std::vector<fs::path> read_manifest(const fs::path& manifest)
{
    const std::string text = read_file_text(manifest);
    std::vector<fs::path> frames;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
        pos = end + 1;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        fs::path p{std::string(line)};
        frames.push_back(p.is_relative() ? manifest.parent_path() / p : p);
    }
    return frames;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Line-laser scan reconstruction and point cloud tools", "linescan"};
    app.require_subcommand(1);

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Reconstruct a point cloud from sweep frames");
    scan_cmd->add_option("frames", scan.inputs,
                         "PNG frames or directories; sorted by file name unless --manifest");
    scan_cmd->add_option("--manifest", scan.manifest, "File listing frames in sweep order");
    scan_cmd->add_option("-o,--output", scan.output, "Output cloud file")->required();
    add_format_option(*scan_cmd, scan.format);
    scan_cmd->add_option("--alpha", scan.alpha, "Red threshold in (0, 255)")
        ->check(CLI::Range(1, 254))
        ->capture_default_str();
    scan_cmd->add_option("--units", scan.units, "Unit label of the output")->capture_default_str();
    scan.calib.add_to(*scan_cmd);
    scan.sweep.add_to(*scan_cmd);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Render synthetic sweep frames and ground truth");
    sim_cmd->add_option("--scene", sim.scene, "Scene height-field file")->required();
    sim_cmd->add_option("--out-dir", sim.out_dir, "Directory for frames and ground truth")
        ->required();
    sim_cmd->add_option("--frames", sim.frames, "Number of frames")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim_cmd->add_option("--laser-start", sim.laser_start, "Laser X position of frame 0")
        ->capture_default_str();
    sim_cmd->add_option("--width", sim.width, "Frame width")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim_cmd->add_option("--height", sim.height, "Frame height")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim_cmd->add_option("--baseline-column", sim.baseline_column,
                        "Line column on a zero-height surface (default width/4)");
    sim_cmd->add_option("--blur", sim.blur, "Gaussian line blur sigma in columns")
        ->check(CLI::NonNegativeNumber);
    sim_cmd->add_option("--noise", sim.noise, "Salt-and-pepper pixel fraction")
        ->check(CLI::Range(0.0, 1.0));
    sim_cmd->add_option("--seed", sim.seed, "Noise seed");
    sim_cmd->add_option("--units", sim.units, "Unit label of the ground truth")
        ->capture_default_str();
    sim.calib.add_to(*sim_cmd);
    sim.sweep.add_to(*sim_cmd);

    DenoiseArgs dn;
    auto* dn_cmd = app.add_subcommand("denoise", "Statistical outlier removal");
    dn_cmd->add_option("input", dn.input, "Input cloud")->required();
    dn_cmd->add_option("output", dn.output, "Output cloud")->required();
    dn_cmd->add_option("-k,--neighbors", dn.k, "Neighbours per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    dn_cmd->add_option("--sigma-mult", dn.sigma_mult, "Standard deviation multiplier")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_option(*dn_cmd, dn.format);

    MergeArgs mg;
    auto* mg_cmd = app.add_subcommand("merge", "Append a transformed cloud to another");
    mg_cmd->add_option("a", mg.a, "First cloud (kept as is)")->required();
    mg_cmd->add_option("b", mg.b, "Second cloud (transformed)")->required();
    mg_cmd->add_option("-o,--output", mg.output, "Output cloud")->required();
    mg_cmd->add_option("--rotate", mg.rotate, "Rotation of b about X Y Z, degrees")
        ->expected(3);
    mg_cmd->add_option("--translate", mg.translate, "Translation of b")->expected(3);
    mg_cmd->add_option("--units-a", mg.units_a, "Unit label of a")->capture_default_str();
    mg_cmd->add_option("--units-b", mg.units_b, "Unit label of b")->capture_default_str();
    add_format_option(*mg_cmd, mg.format);

    ConvertArgs cv;
    auto* cv_cmd = app.add_subcommand("convert", "Convert between xyz, pcd and obj");
    cv_cmd->add_option("input", cv.input, "Input cloud")->required();
    cv_cmd->add_option("output", cv.output, "Output cloud")->required();
    add_format_option(*cv_cmd, cv.format);

    PlotArgs pl;
    auto* pl_cmd = app.add_subcommand("plot", "Scatter plot of a cloud projection as SVG");
    pl_cmd->add_option("input", pl.input, "Input cloud")->required();
    pl_cmd->add_option("-o,--output", pl.output, "Output SVG")->required();
    pl_cmd->add_option("--plane", pl.plane, "XY, XZ or YZ")->capture_default_str();
    pl_cmd->add_option("--size", pl.size, "Image size in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*scan_cmd) {
            return cmd_scan(scan, out);
        }
        if (*sim_cmd) {
            return cmd_simulate(sim, out);
        }
        if (*dn_cmd) {
            return cmd_denoise(dn, out);
        }
        if (*mg_cmd) {
            return cmd_merge(mg, out);
        }
        if (*cv_cmd) {
            return cmd_convert(cv, out);
        }
        if (*pl_cmd) {
            return cmd_plot(pl, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const fs::filesystem_error& e) {
        err << "error (IoError): " << e.what() << "\n";
        return kIoError;
    }
    return kUsageError;
}

} // namespace linescan::cli
