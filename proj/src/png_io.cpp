#include "linescan/png_io.hpp"

#include "linescan/error.hpp"
#include "linescan/file_util.hpp"

#include <png.h>

#include <csetjmp>
#include <cstring>
#include <string>

namespace linescan {

namespace {

struct ReadCursor {
    std::span<const std::uint8_t> bytes;
    std::size_t offset = 0;
};

void read_callback(png_structp png, png_bytep out, png_size_t length)
{
    auto* cursor = static_cast<ReadCursor*>(png_get_io_ptr(png));
    if (cursor->offset + length > cursor->bytes.size()) {
        png_error(png, "unexpected end of data");
    }
    std::memcpy(out, cursor->bytes.data() + cursor->offset, length);
    cursor->offset += length;
}

void write_callback(png_structp png, png_bytep data, png_size_t length)
{
    auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + length);
}

void flush_callback(png_structp) {}

// libpng reports errors through longjmp; capture the message for the exception.
void error_callback(png_structp png, png_const_charp message)
{
    auto* buffer = static_cast<std::string*>(png_get_error_ptr(png));
    if (buffer != nullptr) {
        *buffer = message;
    }
    png_longjmp(png, 1);
}

void warning_callback(png_structp, png_const_charp) {}

} // namespace

Frame decode_png(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
        throw Error(ErrorCode::DecodeError, "not a PNG file");
    }

    std::string message;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &message, error_callback,
                                             warning_callback);
    if (png == nullptr) {
        throw Error(ErrorCode::DecodeError, "cannot allocate PNG reader");
    }
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error(ErrorCode::DecodeError, "cannot allocate PNG info");
    }

    ReadCursor cursor{bytes, 0};
    std::vector<std::uint8_t> raw;
    std::vector<png_bytep> rows;
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    volatile int channels = 0; // assigned after setjmp
    std::string unsupported;

    if (setjmp(png_jmpbuf(png)) != 0) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(ErrorCode::DecodeError, "PNG decode failed: " + message);
    }

    png_set_read_fn(png, &cursor, read_callback);
    png_read_info(png, info);
    width = png_get_image_width(png, info);
    height = png_get_image_height(png, info);
    const int depth = png_get_bit_depth(png, info);
    const int color = png_get_color_type(png, info);
    if (depth != 8) {
        unsupported = "bit depth " + std::to_string(depth);
    } else if (color == PNG_COLOR_TYPE_RGB) {
        channels = 3;
    } else if (color == PNG_COLOR_TYPE_RGB_ALPHA) {
        channels = 4;
    } else {
        unsupported = "color type " + std::to_string(color);
    }

    if (unsupported.empty()) {
        png_set_interlace_handling(png);
        png_read_update_info(png, info);
        const std::size_t stride = png_get_rowbytes(png, info);
        raw.resize(stride * height);
        rows.resize(height);
        for (png_uint_32 y = 0; y < height; ++y) {
            rows[y] = raw.data() + y * stride;
        }
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);
    }
    png_destroy_read_struct(&png, &info, nullptr);

    if (!unsupported.empty()) {
        throw Error(ErrorCode::DecodeError,
                    "unsupported PNG (" + unsupported + "); expected 8-bit RGB or RGBA");
    }

    std::vector<Rgb> pixels;
    pixels.reserve(static_cast<std::size_t>(width) * height);
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (png_uint_32 y = 0; y < height; ++y) {
        const std::uint8_t* row = raw.data() + y * stride;
        for (png_uint_32 x = 0; x < width; ++x) {
            const std::uint8_t* p = row + static_cast<std::size_t>(x) * channels;
            pixels.push_back(Rgb{p[0], p[1], p[2]});
        }
    }
    return Frame(width, height, std::move(pixels));
}

Frame read_png(const std::filesystem::path& path)
{
    const std::vector<std::uint8_t> bytes = read_file_bytes(path);
    try {
        return decode_png(bytes);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> encode_png(const Frame& frame)
{
    if (frame.width() == 0 || frame.height() == 0) {
        throw Error(ErrorCode::InvalidFrame, "cannot encode an empty frame");
    }

    std::string message;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &message, error_callback,
                                              warning_callback);
    if (png == nullptr) {
        throw Error(ErrorCode::IoError, "cannot allocate PNG writer");
    }
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_write_struct(&png, nullptr);
        throw Error(ErrorCode::IoError, "cannot allocate PNG info");
    }

    std::vector<std::uint8_t> out;
    std::vector<std::uint8_t> raw;
    raw.reserve(frame.pixels().size() * 3);
    for (const Rgb& p : frame.pixels()) {
        raw.push_back(p.r);
        raw.push_back(p.g);
        raw.push_back(p.b);
    }
    std::vector<png_bytep> rows(frame.height());
    for (std::size_t y = 0; y < frame.height(); ++y) {
        rows[y] = raw.data() + y * frame.width() * 3;
    }

    if (setjmp(png_jmpbuf(png)) != 0) {
        png_destroy_write_struct(&png, &info);
        throw Error(ErrorCode::IoError, "PNG encode failed: " + message);
    }

    png_set_write_fn(png, &out, write_callback, flush_callback);
    png_set_IHDR(png, info, static_cast<png_uint_32>(frame.width()),
                 static_cast<png_uint_32>(frame.height()), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return out;
}

void write_png(const std::filesystem::path& path, const Frame& frame)
{
    write_file_bytes(path, encode_png(frame));
}

} // namespace linescan
