#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace linescan {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Row-major RGB raster, one camera capture. Immutable after construction.
class Frame {
public:
    Frame() = default;
    /// Throws InvalidFrame when pixels.size() != width * height.
    Frame(std::size_t width, std::size_t height, std::vector<Rgb> pixels);
    /// All-black frame.
    Frame(std::size_t width, std::size_t height);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::span<const Rgb> pixels() const noexcept { return pixels_; }
    [[nodiscard]] std::span<const Rgb> row(std::size_t y) const noexcept
    {
        return std::span<const Rgb>(pixels_).subspan(y * width_, width_);
    }
    [[nodiscard]] const Rgb& at(std::size_t x, std::size_t y) const noexcept
    {
        return pixels_[y * width_ + x];
    }

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<Rgb> pixels_;
};

class GrayImage {
public:
    GrayImage() = default;
    GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> values);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::span<const std::uint8_t> values() const noexcept { return values_; }
    [[nodiscard]] std::uint8_t at(std::size_t x, std::size_t y) const noexcept
    {
        return values_[y * width_ + x];
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> values_;
};

/// Thresholded image; true marks a pixel that mapped to 255.
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(std::size_t width, std::size_t height, std::vector<bool> mask);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] const std::vector<bool>& mask() const noexcept { return mask_; }
    [[nodiscard]] bool at(std::size_t x, std::size_t y) const noexcept
    {
        return mask_[y * width_ + x];
    }

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<bool> mask_;
};

/// Default threshold used by the CLI. Not derived from any measurement.
inline constexpr int kDefaultAlpha = 128;

GrayImage red_channel(const Frame& frame);

/// mask = value >= alpha. Throws AlphaOutOfRange unless 0 < alpha < 255.
BinaryImage threshold(const GrayImage& gray, int alpha);

/// Single-pass red_channel + threshold; bit-identical to the composition.
BinaryImage threshold_red(const Frame& frame, int alpha);

void check_alpha(int alpha);

} // namespace linescan
