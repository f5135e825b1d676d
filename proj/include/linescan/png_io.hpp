#pragma once

#include "linescan/imaging.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace linescan {

// Only 8-bit RGB and RGBA PNGs are accepted; alpha is dropped. Anything else
// throws DecodeError.
Frame decode_png(std::span<const std::uint8_t> bytes);
Frame read_png(const std::filesystem::path& path);

std::vector<std::uint8_t> encode_png(const Frame& frame);
void write_png(const std::filesystem::path& path, const Frame& frame);

} // namespace linescan
