#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace handshape {

// Single-channel 8-bit raster, row-major: data[y * width + x].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    std::uint8_t operator()(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& operator()(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    const std::uint8_t* row(int y) const { return data.data() + static_cast<std::size_t>(y) * width; }

    std::size_t pixel_count() const { return data.size(); }
    bool same_size(const GrayImage& other) const {
        return width == other.width && height == other.height;
    }

    bool operator==(const GrayImage&) const = default;
};

// Interleaved 8-bit RGB raster, row-major, three bytes per pixel.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    RgbImage() = default;
    RgbImage(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3, 0) {}

    const std::uint8_t* pixel(int x, int y) const {
        return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
    std::uint8_t* pixel(int x, int y) {
        return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }

    bool operator==(const RgbImage&) const = default;
};

// Sampled 2-D Gaussian kernel parameters. kernel_size must be odd, sigma > 0.
struct BlurSpec {
    int kernel_size = 5;
    double sigma = 1.0;
};

// BT.601 luma conversion: round(0.299 r + 0.587 g + 0.114 b).
GrayImage to_grayscale(const RgbImage& img);

// Gaussian blur with weights normalized to sum 1 and edge-replicated borders.
// Throws std::invalid_argument on even kernel_size or sigma <= 0.
GrayImage gaussian_blur(const GrayImage& img, const BlurSpec& spec);

// Bilinear resampling with half-pixel-center mapping:
//   src = (dst + 0.5) / scale - 0.5, clamped to the source bounds.
// Output dimensions are max(1, round(dim * scale)). Throws on scale <= 0.
GrayImage resize_bilinear(const GrayImage& img, double scale);

}  // namespace handshape
