#include "handshape/annotate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace handshape {

namespace {

struct Glyph {
    char ch;
    std::uint8_t rows[7];  // 5-bit row patterns, bit 4 is the leftmost column
};

constexpr Glyph kFont[] = {
    {' ', {0, 0, 0, 0, 0, 0, 0}},
    {'!', {0b00100, 0b00100, 0b00100, 0b00100, 0b00100, 0, 0b00100}},
    {'"', {0b01010, 0b01010, 0b01010, 0, 0, 0, 0}},
    {'\'', {0b00100, 0b00100, 0b01000, 0, 0, 0, 0}},
    {'(', {0b00010, 0b00100, 0b01000, 0b01000, 0b01000, 0b00100, 0b00010}},
    {')', {0b01000, 0b00100, 0b00010, 0b00010, 0b00010, 0b00100, 0b01000}},
    {'+', {0, 0b00100, 0b00100, 0b11111, 0b00100, 0b00100, 0}},
    {',', {0, 0, 0, 0, 0, 0b00100, 0b01000}},
    {'-', {0, 0, 0, 0b11111, 0, 0, 0}},
    {'.', {0, 0, 0, 0, 0, 0b01100, 0b01100}},
    {'/', {0, 0b00001, 0b00010, 0b00100, 0b01000, 0b10000, 0}},
    {'0', {0b01110, 0b10001, 0b10011, 0b10101, 0b11001, 0b10001, 0b01110}},
    {'1', {0b00100, 0b01100, 0b00100, 0b00100, 0b00100, 0b00100, 0b01110}},
    {'2', {0b01110, 0b10001, 0b00001, 0b00010, 0b00100, 0b01000, 0b11111}},
    {'3', {0b11111, 0b00010, 0b00100, 0b00010, 0b00001, 0b10001, 0b01110}},
    {'4', {0b00010, 0b00110, 0b01010, 0b10010, 0b11111, 0b00010, 0b00010}},
    {'5', {0b11111, 0b10000, 0b11110, 0b00001, 0b00001, 0b10001, 0b01110}},
    {'6', {0b00110, 0b01000, 0b10000, 0b11110, 0b10001, 0b10001, 0b01110}},
    {'7', {0b11111, 0b00001, 0b00010, 0b00100, 0b01000, 0b01000, 0b01000}},
    {'8', {0b01110, 0b10001, 0b10001, 0b01110, 0b10001, 0b10001, 0b01110}},
    {'9', {0b01110, 0b10001, 0b10001, 0b01111, 0b00001, 0b00010, 0b01100}},
    {':', {0, 0b01100, 0b01100, 0, 0b01100, 0b01100, 0}},
    {'=', {0, 0, 0b11111, 0, 0b11111, 0, 0}},
    {'?', {0b01110, 0b10001, 0b00001, 0b00010, 0b00100, 0, 0b00100}},
    {'A', {0b01110, 0b10001, 0b10001, 0b11111, 0b10001, 0b10001, 0b10001}},
    {'B', {0b11110, 0b10001, 0b10001, 0b11110, 0b10001, 0b10001, 0b11110}},
    {'C', {0b01110, 0b10001, 0b10000, 0b10000, 0b10000, 0b10001, 0b01110}},
    {'D', {0b11110, 0b10001, 0b10001, 0b10001, 0b10001, 0b10001, 0b11110}},
    {'E', {0b11111, 0b10000, 0b10000, 0b11110, 0b10000, 0b10000, 0b11111}},
    {'F', {0b11111, 0b10000, 0b10000, 0b11110, 0b10000, 0b10000, 0b10000}},
    {'G', {0b01110, 0b10001, 0b10000, 0b10111, 0b10001, 0b10001, 0b01111}},
    {'H', {0b10001, 0b10001, 0b10001, 0b11111, 0b10001, 0b10001, 0b10001}},
    {'I', {0b01110, 0b00100, 0b00100, 0b00100, 0b00100, 0b00100, 0b01110}},
    {'J', {0b00111, 0b00010, 0b00010, 0b00010, 0b00010, 0b10010, 0b01100}},
    {'K', {0b10001, 0b10010, 0b10100, 0b11000, 0b10100, 0b10010, 0b10001}},
    {'L', {0b10000, 0b10000, 0b10000, 0b10000, 0b10000, 0b10000, 0b11111}},
    {'M', {0b10001, 0b11011, 0b10101, 0b10101, 0b10001, 0b10001, 0b10001}},
    {'N', {0b10001, 0b11001, 0b10101, 0b10011, 0b10001, 0b10001, 0b10001}},
    {'O', {0b01110, 0b10001, 0b10001, 0b10001, 0b10001, 0b10001, 0b01110}},
    {'P', {0b11110, 0b10001, 0b10001, 0b11110, 0b10000, 0b10000, 0b10000}},
    {'Q', {0b01110, 0b10001, 0b10001, 0b10001, 0b10101, 0b10010, 0b01101}},
    {'R', {0b11110, 0b10001, 0b10001, 0b11110, 0b10100, 0b10010, 0b10001}},
    {'S', {0b01111, 0b10000, 0b10000, 0b01110, 0b00001, 0b00001, 0b11110}},
    {'T', {0b11111, 0b00100, 0b00100, 0b00100, 0b00100, 0b00100, 0b00100}},
    {'U', {0b10001, 0b10001, 0b10001, 0b10001, 0b10001, 0b10001, 0b01110}},
    {'V', {0b10001, 0b10001, 0b10001, 0b10001, 0b10001, 0b01010, 0b00100}},
    {'W', {0b10001, 0b10001, 0b10001, 0b10101, 0b10101, 0b11011, 0b10001}},
    {'X', {0b10001, 0b10001, 0b01010, 0b00100, 0b01010, 0b10001, 0b10001}},
    {'Y', {0b10001, 0b10001, 0b01010, 0b00100, 0b00100, 0b00100, 0b00100}},
    {'Z', {0b11111, 0b00001, 0b00010, 0b00100, 0b01000, 0b10000, 0b11111}},
};

const std::uint8_t* glyph_rows(char c) {
    const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const Glyph& g : kFont) {
        if (g.ch == upper) return g.rows;
    }
    return nullptr;
}

void put_pixel(RgbImage& img, int x, int y, Color color) {
    if (x < 0 || x >= img.width || y < 0 || y >= img.height) return;
    std::uint8_t* p = img.pixel(x, y);
    p[0] = color.r;
    p[1] = color.g;
    p[2] = color.b;
}

void fill_block(RgbImage& img, int x, int y, int size, Color color) {
    for (int j = 0; j < size; ++j) {
        for (int i = 0; i < size; ++i) put_pixel(img, x + i, y + j, color);
    }
}

}  // namespace

RgbImage to_rgb(const GrayImage& gray) {
    RgbImage out(gray.width, gray.height);
    for (std::size_t i = 0; i < gray.data.size(); ++i) {
        out.data[i * 3 + 0] = gray.data[i];
        out.data[i * 3 + 1] = gray.data[i];
        out.data[i * 3 + 2] = gray.data[i];
    }
    return out;
}

void draw_rect(RgbImage& img, const BoundingBox& box, Color color, int thickness) {
    for (int t = 0; t < thickness; ++t) {
        const int x0 = box.x_min - t;
        const int y0 = box.y_min - t;
        const int x1 = box.x_max + t;
        const int y1 = box.y_max + t;
        for (int x = x0; x <= x1; ++x) {
            put_pixel(img, x, y0, color);
            put_pixel(img, x, y1, color);
        }
        for (int y = y0; y <= y1; ++y) {
            put_pixel(img, x0, y, color);
            put_pixel(img, x1, y, color);
        }
    }
}

void draw_cross(RgbImage& img, int x, int y, int arm, Color color) {
    for (int d = -arm; d <= arm; ++d) {
        put_pixel(img, x + d, y, color);
        put_pixel(img, x, y + d, color);
    }
}

void draw_text(RgbImage& img, int x, int y, std::string_view text, Color color, int scale) {
    if (scale < 1) scale = 1;
    int pen = x;
    for (char c : text) {
        if (const std::uint8_t* rows = glyph_rows(c)) {
            for (int j = 0; j < 7; ++j) {
                for (int i = 0; i < 5; ++i) {
                    if (rows[j] & (1u << (4 - i))) {
                        fill_block(img, pen + i * scale, y + j * scale, scale, color);
                    }
                }
            }
        }
        pen += 6 * scale;
    }
}

RgbImage annotate_decision(const GrayImage& frame, int frame_index, const FrameDecision& decision) {
    RgbImage out = to_rgb(frame);
    const Color box_color{0, 220, 0};
    const Color cross_color{230, 60, 60};
    const Color text_color{250, 220, 40};

    if (decision.box) draw_rect(out, *decision.box, box_color, 2);
    if (decision.centroid) {
        draw_cross(out, static_cast<int>(std::lround(decision.centroid->cx)),
                   static_cast<int>(std::lround(decision.centroid->cy)), 4, cross_color);
    }

    std::ostringstream status;
    status << "frame " << frame_index << "  " << to_string(decision.label) << "  " << std::fixed
           << std::setprecision(4) << decision.score;
    if (decision.moving) status << "  moving";
    draw_text(out, 2, 2, status.str(), text_color);
    if (decision.message) draw_text(out, 2, 12, *decision.message, text_color);
    return out;
}

}  // namespace handshape
