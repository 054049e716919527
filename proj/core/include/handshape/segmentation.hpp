#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "handshape/image.hpp"

namespace handshape {

// Row-major raster restricted to values {0, 255}.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    BinaryMask() = default;
    BinaryMask(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    std::uint8_t operator()(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& operator()(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    bool operator==(const BinaryMask&) const = default;
};

struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point&) const = default;
};

// Chain-code directions in image coordinates (x right, y down):
//   0:(+1, 0)  1:(+1,-1)  2:( 0,-1)  3:(-1,-1)
//   4:(-1, 0)  5:(-1,+1)  6:( 0,+1)  7:(+1,+1)
inline constexpr int kChainDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
inline constexpr int kChainDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

// Closed boundary walk of one 8-connected component. chain_code[i] is the
// direction from points[i] to points[(i+1) % size]; a single-pixel contour
// stores the placeholder code 0.
struct Contour {
    std::vector<Point> points;
    std::vector<std::uint8_t> chain_code;
};

// One filled 8-connected component: mask holds exactly the component's
// 255-pixels at the source dimensions, area is their count.
struct Region {
    BinaryMask mask;
    std::int64_t area = 0;
    Contour contour;
};

// Per-pixel |background - frame|. Throws on dimension mismatch.
GrayImage abs_diff(const GrayImage& background, const GrayImage& frame);

// 255 where diff > threshold (strict), 0 otherwise.
BinaryMask threshold_binary(const GrayImage& diff, std::uint8_t threshold);

// Outer boundary of every 8-connected component, one contour per component,
// traced clockwise by Moore-neighbor walking from the component's top-most
// then left-most pixel. Components are reported in raster order of their
// start pixels.
std::vector<Contour> find_contours(const BinaryMask& mask);

// The component the contour was traced from, recovered from the mask by
// filling from the contour's start pixel. Throws if the contour is empty,
// out of bounds, or starts on a background pixel.
Region fill_region(const Contour& contour, const BinaryMask& mask);

// Region of maximal area; ties broken by raster order of the start pixel.
// Empty optional when the mask has no set pixels.
std::optional<Region> largest_region(const BinaryMask& mask);

}  // namespace handshape
