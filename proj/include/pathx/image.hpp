#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace pathx {

// 8-bit RGB raster, row-major, 3 bytes per pixel.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    Image() = default;
    Image(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3, fill) {}

    std::uint8_t& at(int x, int y, int c) { return rgb[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    std::uint8_t at(int x, int y, int c) const { return rgb[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }

    void set_pixel(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        at(x, y, 0) = r;
        at(x, y, 1) = g;
        at(x, y, 2) = b;
    }
};

// Rec. 601 luma in [0, 255].
inline double luma(double r, double g, double b) { return 0.299 * r + 0.587 * g + 0.114 * b; }

// Reads PNG or PPM (P6) depending on extension; grayscale/palette/alpha PNGs
// are expanded to 8-bit RGB. Throws InputError on unreadable files.
Image read_image(const std::filesystem::path& path);

void write_png(const std::filesystem::path& path, const Image& img);
void write_ppm(const std::filesystem::path& path, const Image& img);

// In-memory PNG encode (used to embed tiles in SVG overlays).
std::vector<std::uint8_t> encode_png(const Image& img);

std::string base64_encode(const std::uint8_t* data, std::size_t n);

}  // namespace pathx
