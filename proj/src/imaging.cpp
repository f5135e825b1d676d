#include "linescan/imaging.hpp"

#include "linescan/error.hpp"

#include <string>

namespace linescan {

namespace {

void check_size(std::size_t width, std::size_t height, std::size_t actual, const char* what)
{
    if (actual != width * height) {
        throw Error(ErrorCode::InvalidFrame,
                    std::string(what) + ": expected " + std::to_string(width * height)
                        + " values for " + std::to_string(width) + "x" + std::to_string(height)
                        + ", got " + std::to_string(actual));
    }
}

} // namespace

Frame::Frame(std::size_t width, std::size_t height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels))
{
    check_size(width_, height_, pixels_.size(), "frame");
}

Frame::Frame(std::size_t width, std::size_t height)
    : width_(width), height_(height), pixels_(width * height)
{
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> values)
    : width_(width), height_(height), values_(std::move(values))
{
    check_size(width_, height_, values_.size(), "gray image");
}

BinaryImage::BinaryImage(std::size_t width, std::size_t height, std::vector<bool> mask)
    : width_(width), height_(height), mask_(std::move(mask))
{
    check_size(width_, height_, mask_.size(), "binary image");
}

void check_alpha(int alpha)
{
    if (alpha <= 0 || alpha >= 255) {
        throw Error(ErrorCode::AlphaOutOfRange,
                    "threshold alpha must lie in (0, 255), got " + std::to_string(alpha));
    }
}

GrayImage red_channel(const Frame& frame)
{
    std::vector<std::uint8_t> values;
    values.reserve(frame.pixels().size());
    for (const Rgb& p : frame.pixels()) {
        values.push_back(p.r);
    }
    return GrayImage(frame.width(), frame.height(), std::move(values));
}

BinaryImage threshold(const GrayImage& gray, int alpha)
{
    check_alpha(alpha);
    std::vector<bool> mask;
    mask.reserve(gray.values().size());
    for (std::uint8_t v : gray.values()) {
        mask.push_back(v >= alpha);
    }
    return BinaryImage(gray.width(), gray.height(), std::move(mask));
}

BinaryImage threshold_red(const Frame& frame, int alpha)
{
    check_alpha(alpha);
    std::vector<bool> mask(frame.pixels().size());
    std::size_t i = 0;
    for (const Rgb& p : frame.pixels()) {
        mask[i++] = p.r >= alpha;
    }
    return BinaryImage(frame.width(), frame.height(), std::move(mask));
}

} // namespace linescan
