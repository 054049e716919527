#pragma once

#include <cstdint>
#include <string_view>

#include "handshape/image.hpp"
#include "handshape/moments.hpp"
#include "handshape/tracking.hpp"

namespace handshape {

struct Color {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
};

RgbImage to_rgb(const GrayImage& gray);

// All drawing clips to the image bounds.
void draw_rect(RgbImage& img, const BoundingBox& box, Color color, int thickness = 1);
void draw_cross(RgbImage& img, int x, int y, int arm, Color color);

// 5x7 bitmap font, printable ASCII; unsupported characters advance the pen
// without drawing. (x, y) is the top-left corner of the first glyph.
void draw_text(RgbImage& img, int x, int y, std::string_view text, Color color, int scale = 1);

// Frame overlay: bounding box, centroid cross, and a status line with the
// label, score, and message.
RgbImage annotate_decision(const GrayImage& frame, int frame_index, const FrameDecision& decision);

}  // namespace handshape
