#include "linescan/plot.hpp"

#include "linescan/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <utility>

namespace linescan {

namespace {

std::pair<double, double> project(const Point3& p, Plane plane)
{
    switch (plane) {
    case Plane::XY: return {p.x, p.y};
    case Plane::XZ: return {p.x, p.z};
    case Plane::YZ: return {p.y, p.z};
    }
    return {p.x, p.y};
}

std::string fixed3(double v)
{
    std::array<char, 48> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 3);
    std::string s(buf.data(), ec == std::errc() ? ptr : buf.data());
    return s == "-0.000" ? "0.000" : s;
}

std::string_view axis_names(Plane plane)
{
    switch (plane) {
    case Plane::XY: return "XY";
    case Plane::XZ: return "XZ";
    case Plane::YZ: return "YZ";
    }
    return "XY";
}

} // namespace

std::optional<Plane> parse_plane(std::string_view name)
{
    if (name == "XY" || name == "xy") {
        return Plane::XY;
    }
    if (name == "XZ" || name == "xz") {
        return Plane::XZ;
    }
    if (name == "YZ" || name == "yz") {
        return Plane::YZ;
    }
    return std::nullopt;
}

std::string plot_svg(const PointCloud& cloud, Plane plane, int size)
{
    if (size <= 0) {
        throw Error(ErrorCode::InvalidCloud, "plot size must be positive");
    }

    double u_min = std::numeric_limits<double>::infinity();
    double u_max = -u_min;
    double v_min = u_min;
    double v_max = -u_min;
    for (const Point3& p : cloud.points()) {
        const auto [u, v] = project(p, plane);
        u_min = std::min(u_min, u);
        u_max = std::max(u_max, u);
        v_min = std::min(v_min, v);
        v_max = std::max(v_max, v);
    }

    const double extent = static_cast<double>(size);
    const double margin = 0.05 * extent;
    const double usable = extent - 2.0 * margin;
    const double span = cloud.empty() ? 0.0 : std::max(u_max - u_min, v_max - v_min);
    const double scale = span > 0.0 ? usable / span : 0.0;
    // Center the data inside the square drawing area.
    const double u_pad = (usable - (u_max - u_min) * scale) / 2.0;
    const double v_pad = (usable - (v_max - v_min) * scale) / 2.0;
    const std::string radius = fixed3(std::max(0.5, extent / 400.0));

    const std::string sz = std::to_string(size);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + sz
           + "\" height=\"" + sz + "\" viewBox=\"0 0 " + sz + " " + sz + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + sz + "\" height=\"" + sz + "\" fill=\"white\"/>\n";
    out += "<g id=\"points-" + std::string(axis_names(plane)) + "\" fill=\"#c00000\">\n";
    for (const Point3& p : cloud.points()) {
        const auto [u, v] = project(p, plane);
        const double cx = margin + u_pad + (u - u_min) * scale;
        const double cy = extent - (margin + v_pad + (v - v_min) * scale);
        out += "<circle cx=\"" + fixed3(cx) + "\" cy=\"" + fixed3(cy) + "\" r=\"" + radius
               + "\"/>\n";
    }
    out += "</g>\n";
    out += "</svg>\n";
    return out;
}

} // namespace linescan
