#include "handshape/moments.hpp"

#include <algorithm>
#include <stdexcept>

namespace handshape {

std::int64_t moment00(const Region& region) {
    std::int64_t count = 0;
    for (std::uint8_t v : region.mask.data) count += v != 0;
    return count;
}

Centroid centroid(const Region& region) {
    std::int64_t m00 = 0;
    std::int64_t sum_x = 0;
    std::int64_t sum_y = 0;
    const BinaryMask& mask = region.mask;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (mask(x, y) != 0) {
                ++m00;
                sum_x += x;
                sum_y += y;
            }
        }
    }
    if (m00 == 0) throw std::invalid_argument("centroid: empty region");
    return {static_cast<double>(sum_x) / static_cast<double>(m00),
            static_cast<double>(sum_y) / static_cast<double>(m00)};
}

BoundingBox bounding_box(const Contour& contour) {
    if (contour.points.empty()) throw std::invalid_argument("bounding_box: empty contour");
    BoundingBox box{contour.points[0].x, contour.points[0].y, contour.points[0].x, contour.points[0].y};
    for (const Point& p : contour.points) {
        box.x_min = std::min(box.x_min, p.x);
        box.y_min = std::min(box.y_min, p.y);
        box.x_max = std::max(box.x_max, p.x);
        box.y_max = std::max(box.y_max, p.y);
    }
    return box;
}

}  // namespace handshape
