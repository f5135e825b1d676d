#include "linescan/cloud_io.hpp"
#include "linescan/error.hpp"
#include "linescan/file_util.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace linescan;

namespace {

const std::filesystem::path kGolden{LINESCAN_GOLDEN_DIR};

PointCloud golden_cloud()
{
    return PointCloud({{1.0, 2.0, 3.0},
                       {0.1234567, 0.0, -1.0},
                       {-2.5, 1e-7, 1234.5678915},
                       {-0.0000004, 100.0000005, -7.25}});
}

PointCloud random_cloud(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(-5000.0, 5000.0);
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back({u(rng), u(rng) * 1e-3, u(rng) * 1e-7});
    }
    return PointCloud(pts);
}

int parse_error_line(std::string_view text)
{
    try {
        (void)import_xyz(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        const std::string what = e.what();
        return std::stoi(what.substr(what.find("line ") + 5));
    }
    FAIL("expected ParseError");
    return -1;
}

} // namespace

TEST_CASE("coordinates use six decimals")
{
    CHECK(format_coordinate(1.0) == "1.000000");
    CHECK(format_coordinate(0.1234567) == "0.123457");
    CHECK(format_coordinate(-1.0) == "-1.000000");
    CHECK(format_coordinate(-0.0) == "0.000000");
    CHECK(format_coordinate(-1e-9) == "0.000000");
    CHECK(format_coordinate(1e15) == "1000000000000000.000000");
}

TEST_CASE("export_xyz")
{
    CHECK(export_xyz(PointCloud({{1, 2, 3}})) == "1.000000 2.000000 3.000000\n");
    CHECK(export_xyz(PointCloud{}).empty());
    CHECK(export_xyz(PointCloud({{0.1234567, 0, -1}})) == "0.123457 0.000000 -1.000000\n");
}

TEST_CASE("exports match the golden files byte for byte")
{
    const PointCloud c = golden_cloud();
    CHECK(export_xyz(c) == read_file_text(kGolden / "sample.xyz"));
    CHECK(export_pcd(c) == read_file_text(kGolden / "sample.pcd"));
    CHECK(export_obj(c) == read_file_text(kGolden / "sample.obj"));
}

TEST_CASE("golden files import back to the quantized cloud")
{
    const PointCloud from_xyz = read_cloud(kGolden / "sample.xyz");
    const PointCloud from_pcd = read_cloud(kGolden / "sample.pcd");
    const PointCloud from_obj = read_cloud(kGolden / "sample.obj");
    CHECK(from_xyz == from_pcd);
    CHECK(from_xyz == from_obj);
    REQUIRE(from_xyz.size() == 4);
    CHECK(from_xyz.points()[1].x == 0.123457);
    CHECK(from_xyz.points()[2].z == 1234.567892);
}

TEST_CASE("export is idempotent after the first quantization")
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        const PointCloud c = random_cloud(rng, 50);
        const std::string once = export_xyz(c);
        const PointCloud back = import_xyz(once);
        REQUIRE(back.size() == c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(std::abs(back.points()[i].x - c.points()[i].x) <= 5e-7 + 1e-9);
            CHECK(std::abs(back.points()[i].y - c.points()[i].y) <= 5e-7 + 1e-9);
            CHECK(std::abs(back.points()[i].z - c.points()[i].z) <= 5e-7 + 1e-9);
        }
        CHECK(export_xyz(back) == once);
        CHECK(export_pcd(import_pcd(export_pcd(back))) == export_pcd(back));
        CHECK(export_obj(import_obj(export_obj(back))) == export_obj(back));
    }
}

TEST_CASE("import_xyz tolerates whitespace and blank lines")
{
    const PointCloud c = import_xyz("  1\t2    3\r\n\n4 5 6");
    REQUIRE(c.size() == 2);
    CHECK(c.points()[0] == Point3{1, 2, 3});
    CHECK(c.points()[1] == Point3{4, 5, 6});
    CHECK(import_xyz("+1 -2 3e2\n").points()[0] == Point3{1, -2, 300});
    CHECK(import_xyz("").empty());
}

TEST_CASE("import_xyz reports the failing line")
{
    CHECK(parse_error_line("1 2 3\n1 2\n") == 2);
    CHECK(parse_error_line("1 2 3\n\n1 2 x\n") == 3);
    CHECK(parse_error_line("1 2 3 4\n") == 1);
    CHECK(parse_error_line("nan 0 0\n") == 1);
    CHECK(parse_error_line("1 2 3\n4 5 inf") == 2);
}

TEST_CASE("pcd header is validated")
{
    CHECK_THROWS_AS(import_pcd("VERSION 0.7\nFIELDS x y z\nPOINTS 0\n"), Error);
    CHECK_THROWS_AS(import_pcd("FIELDS x y z rgb\nDATA ascii\n"), Error);
    CHECK_THROWS_AS(import_pcd("FIELDS x y z\nDATA binary\n"), Error);
    CHECK_THROWS_AS(import_pcd("FIELDS x y z\nPOINTS 2\nDATA ascii\n1 2 3\n"), Error);
    CHECK(import_pcd("FIELDS x y z\nPOINTS 1\nDATA ascii\n1 2 3\n").size() == 1);

    const std::string pcd = export_pcd(PointCloud({{1, 2, 3}, {4, 5, 6}}));
    CHECK(pcd.find("WIDTH 2\n") != std::string::npos);
    CHECK(pcd.find("POINTS 2\n") != std::string::npos);
    CHECK(pcd.find("HEIGHT 1\n") != std::string::npos);
    CHECK(pcd.find("DATA ascii\n1.000000 2.000000 3.000000\n") != std::string::npos);
}

TEST_CASE("obj import reads vertices and skips everything else")
{
    const PointCloud c = import_obj("# comment\nv 1 2 3\nvn 0 0 1\nv 4 5 6 1.0\nf 1 2 3\n");
    REQUIRE(c.size() == 2);
    CHECK(c.points()[1] == Point3{4, 5, 6});
    CHECK(export_obj(PointCloud({{1, 2, 3}})) == "v 1.000000 2.000000 3.000000\n");
}

TEST_CASE("format selection")
{
    CHECK(format_from_path("a/b.PCD") == CloudFormat::Pcd);
    CHECK(format_from_path("x.obj") == CloudFormat::Obj);
    CHECK(format_from_path("x.xyz") == CloudFormat::Xyz);
    CHECK_FALSE(format_from_path("x.ply").has_value());
    CHECK_FALSE(format_from_path("noext").has_value());
    CHECK(parse_cloud_format("XYZ") == CloudFormat::Xyz);
}
