#pragma once

#include <cstdint>

#include "handshape/segmentation.hpp"

namespace handshape {

// Mean position of a region's set pixels, with integer pixel coordinates
// treated as exact lattice points.
struct Centroid {
    double cx = 0.0;
    double cy = 0.0;
};

// Inclusive pixel-coordinate extremes.
struct BoundingBox {
    int x_min = 0;
    int y_min = 0;
    int x_max = 0;
    int y_max = 0;
};

// Zeroth moment of the region mask normalized to {0,1}: the set-pixel count.
// Any nonzero stored value counts as one, so {0,255} and {0,1} masks agree.
std::int64_t moment00(const Region& region);

// (sum x, sum y) / M00 over the filled mask. Throws std::invalid_argument
// when the region is empty (M00 = 0).
Centroid centroid(const Region& region);

// Componentwise min/max over the contour points. Throws on an empty contour.
BoundingBox bounding_box(const Contour& contour);

}  // namespace handshape
