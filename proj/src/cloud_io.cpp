#include "linescan/cloud_io.hpp"

#include "linescan/error.hpp"
#include "linescan/file_util.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace linescan {

namespace {

constexpr std::string_view kWhitespace = " \t\r\f\v";

[[noreturn]] void parse_error(std::size_t line, const std::string& message)
{
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        pos = line.find_first_not_of(kWhitespace, pos);
        if (pos == std::string_view::npos) {
            break;
        }
        const std::size_t end = std::min(line.find_first_of(kWhitespace, pos), line.size());
        fields.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return fields;
}

double parse_double(std::string_view field, std::size_t line)
{
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && field.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        parse_error(line, "invalid number '" + std::string(field) + "'");
    }
    return value;
}

// Calls fn(line_number, line) for each line; a trailing newline does not
// start an extra line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        fn(++line_no, text.substr(pos, end - pos));
        pos = end + 1;
    }
}

Point3 parse_xyz_fields(std::span<const std::string_view> fields, std::size_t line)
{
    if (fields.size() != 3) {
        parse_error(line, "expected 3 coordinates, got " + std::to_string(fields.size()));
    }
    return Point3{parse_double(fields[0], line), parse_double(fields[1], line),
                  parse_double(fields[2], line)};
}

void append_xyz(std::string& out, const Point3& p)
{
    out += format_coordinate(p.x);
    out += ' ';
    out += format_coordinate(p.y);
    out += ' ';
    out += format_coordinate(p.z);
    out += '\n';
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

std::string_view to_string(CloudFormat format) noexcept
{
    switch (format) {
    case CloudFormat::Xyz: return "xyz";
    case CloudFormat::Pcd: return "pcd";
    case CloudFormat::Obj: return "obj";
    }
    return "xyz";
}

std::optional<CloudFormat> parse_cloud_format(std::string_view name)
{
    const std::string n = lower(name);
    if (n == "xyz") {
        return CloudFormat::Xyz;
    }
    if (n == "pcd") {
        return CloudFormat::Pcd;
    }
    if (n == "obj") {
        return CloudFormat::Obj;
    }
    return std::nullopt;
}

std::optional<CloudFormat> format_from_path(const std::filesystem::path& path)
{
    const std::string ext = path.extension().string();
    if (ext.size() < 2) {
        return std::nullopt;
    }
    return parse_cloud_format(std::string_view(ext).substr(1));
}

std::string format_coordinate(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 6);
    if (ec != std::errc()) {
        // Only reachable for magnitudes beyond ~1e56.
        throw Error(ErrorCode::InvalidCloud, "coordinate too large to format");
    }
    std::string_view text(buf.data(), static_cast<std::size_t>(ptr - buf.data()));
    if (text == "-0.000000") {
        text.remove_prefix(1);
    }
    return std::string(text);
}

std::string export_xyz(const PointCloud& cloud)
{
    std::string out;
    out.reserve(cloud.size() * 32);
    for (const Point3& p : cloud.points()) {
        append_xyz(out, p);
    }
    return out;
}

std::string export_pcd(const PointCloud& cloud)
{
    const std::string n = std::to_string(cloud.size());
    std::string out;
    out += "# .PCD v0.7 - Point Cloud Data file format\n";
    out += "VERSION 0.7\n";
    out += "FIELDS x y z\n";
    out += "SIZE 8 8 8\n";
    out += "TYPE F F F\n";
    out += "COUNT 1 1 1\n";
    out += "WIDTH " + n + "\n";
    out += "HEIGHT 1\n";
    out += "VIEWPOINT 0 0 0 1 0 0 0\n";
    out += "POINTS " + n + "\n";
    out += "DATA ascii\n";
    out += export_xyz(cloud);
    return out;
}

std::string export_obj(const PointCloud& cloud)
{
    std::string out;
    out.reserve(cloud.size() * 34);
    for (const Point3& p : cloud.points()) {
        out += "v ";
        append_xyz(out, p);
    }
    return out;
}

std::string export_cloud(const PointCloud& cloud, CloudFormat format)
{
    switch (format) {
    case CloudFormat::Xyz: return export_xyz(cloud);
    case CloudFormat::Pcd: return export_pcd(cloud);
    case CloudFormat::Obj: return export_obj(cloud);
    }
    return export_xyz(cloud);
}

PointCloud import_xyz(std::string_view text, std::string units)
{
    std::vector<Point3> points;
    for_each_line(text, [&](std::size_t line, std::string_view content) {
        const auto fields = split_fields(content);
        if (!fields.empty()) {
            points.push_back(parse_xyz_fields(fields, line));
        }
    });
    return PointCloud(std::move(points), std::move(units));
}

PointCloud import_pcd(std::string_view text, std::string units)
{
    std::vector<Point3> points;
    bool in_data = false;
    bool fields_ok = false;
    std::optional<std::size_t> declared;
    for_each_line(text, [&](std::size_t line, std::string_view content) {
        const auto fields = split_fields(content);
        if (fields.empty()) {
            return;
        }
        if (in_data) {
            points.push_back(parse_xyz_fields(fields, line));
            return;
        }
        if (fields[0].starts_with('#')) {
            return;
        }
        const std::string key = lower(fields[0]);
        if (key == "fields") {
            fields_ok = fields.size() == 4 && fields[1] == "x" && fields[2] == "y"
                        && fields[3] == "z";
            if (!fields_ok) {
                parse_error(line, "only 'FIELDS x y z' is supported");
            }
        } else if (key == "points") {
            if (fields.size() != 2) {
                parse_error(line, "malformed POINTS");
            }
            std::size_t n = 0;
            const auto [ptr, ec] =
                std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), n);
            if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) {
                parse_error(line, "malformed POINTS count");
            }
            declared = n;
        } else if (key == "data") {
            if (fields.size() != 2 || lower(fields[1]) != "ascii") {
                parse_error(line, "only 'DATA ascii' is supported");
            }
            if (!fields_ok) {
                parse_error(line, "DATA before FIELDS");
            }
            in_data = true;
        }
    });
    if (!in_data) {
        throw Error(ErrorCode::ParseError, "PCD header has no DATA line");
    }
    if (declared && *declared != points.size()) {
        throw Error(ErrorCode::ParseError,
                    "PCD declares " + std::to_string(*declared) + " points but holds "
                        + std::to_string(points.size()));
    }
    return PointCloud(std::move(points), std::move(units));
}

PointCloud import_obj(std::string_view text, std::string units)
{
    std::vector<Point3> points;
    for_each_line(text, [&](std::size_t line, std::string_view content) {
        const auto fields = split_fields(content);
        if (fields.empty() || fields[0] != "v") {
            return;
        }
        // Optional fourth (w) component is ignored.
        const std::size_t n = fields.size() == 5 ? 3 : fields.size() - 1;
        points.push_back(parse_xyz_fields(std::span(fields).subspan(1, n), line));
    });
    return PointCloud(std::move(points), std::move(units));
}

PointCloud import_cloud(std::string_view text, CloudFormat format, std::string units)
{
    switch (format) {
    case CloudFormat::Xyz: return import_xyz(text, std::move(units));
    case CloudFormat::Pcd: return import_pcd(text, std::move(units));
    case CloudFormat::Obj: return import_obj(text, std::move(units));
    }
    return import_xyz(text, std::move(units));
}

PointCloud read_cloud(const std::filesystem::path& path, std::string units)
{
    const auto format = format_from_path(path);
    if (!format) {
        throw Error(ErrorCode::ParseError,
                    path.string() + ": unknown cloud format (expected .xyz, .pcd or .obj)");
    }
    const std::string text = read_file_text(path);
    try {
        return import_cloud(text, *format, std::move(units));
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

void write_cloud(const std::filesystem::path& path, const PointCloud& cloud, CloudFormat format)
{
    write_file_text(path, export_cloud(cloud, format));
}

} // namespace linescan
