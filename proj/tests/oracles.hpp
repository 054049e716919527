// Independent reference implementations used to cross-check the library.
// Everything here is written for clarity over speed: direct summation,
// no integral images, no shared helpers with the production code.
#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "handshape/image.hpp"
#include "handshape/segmentation.hpp"

namespace oracle {

// Textbook normalized cross-correlation at one placement.
inline double ncc_at(const handshape::GrayImage& img, const handshape::GrayImage& tmpl, int u, int v) {
    const int tw = tmpl.width;
    const int th = tmpl.height;
    const double n = static_cast<double>(tw) * th;

    double mean_i = 0.0;
    double mean_t = 0.0;
    for (int y = 0; y < th; ++y) {
        for (int x = 0; x < tw; ++x) {
            mean_i += img(u + x, v + y);
            mean_t += tmpl(x, y);
        }
    }
    mean_i /= n;
    mean_t /= n;

    double num = 0.0;
    double den_i = 0.0;
    double den_t = 0.0;
    for (int y = 0; y < th; ++y) {
        for (int x = 0; x < tw; ++x) {
            const double a = img(u + x, v + y) - mean_i;
            const double b = tmpl(x, y) - mean_t;
            num += a * b;
            den_i += a * a;
            den_t += b * b;
        }
    }
    if (den_i <= 0.0 || den_t <= 0.0) return 0.0;
    return num / std::sqrt(den_i * den_t);
}

inline handshape::GrayImage blur(const handshape::GrayImage& img, int kernel_size, double sigma) {
    const int half = kernel_size / 2;
    std::vector<double> w(static_cast<std::size_t>(kernel_size) * kernel_size);
    double total = 0.0;
    for (int j = 0; j < kernel_size; ++j) {
        for (int i = 0; i < kernel_size; ++i) {
            const double dx = i - half;
            const double dy = j - half;
            w[static_cast<std::size_t>(j) * kernel_size + i] =
                std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
            total += w[static_cast<std::size_t>(j) * kernel_size + i];
        }
    }
    handshape::GrayImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int j = 0; j < kernel_size; ++j) {
                for (int i = 0; i < kernel_size; ++i) {
                    int sx = x + i - half;
                    int sy = y + j - half;
                    sx = sx < 0 ? 0 : (sx >= img.width ? img.width - 1 : sx);
                    sy = sy < 0 ? 0 : (sy >= img.height ? img.height - 1 : sy);
                    acc += w[static_cast<std::size_t>(j) * kernel_size + i] / total * img(sx, sy);
                }
            }
            out(x, y) = static_cast<std::uint8_t>(std::lround(acc));
        }
    }
    return out;
}

inline handshape::GrayImage resize(const handshape::GrayImage& img, double scale) {
    const int out_w = std::max(1, static_cast<int>(std::lround(img.width * scale)));
    const int out_h = std::max(1, static_cast<int>(std::lround(img.height * scale)));
    handshape::GrayImage out(out_w, out_h);
    for (int y = 0; y < out_h; ++y) {
        for (int x = 0; x < out_w; ++x) {
            double sx = (x + 0.5) / scale - 0.5;
            double sy = (y + 0.5) / scale - 0.5;
            sx = std::min(std::max(sx, 0.0), static_cast<double>(img.width - 1));
            sy = std::min(std::max(sy, 0.0), static_cast<double>(img.height - 1));
            const int x0 = static_cast<int>(sx);
            const int y0 = static_cast<int>(sy);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const int y1 = std::min(y0 + 1, img.height - 1);
            const double fx = sx - x0;
            const double fy = sy - y0;
            const double value = (1 - fy) * ((1 - fx) * img(x0, y0) + fx * img(x1, y0)) +
                                 fy * ((1 - fx) * img(x0, y1) + fx * img(x1, y1));
            out(x, y) = static_cast<std::uint8_t>(std::lround(value));
        }
    }
    return out;
}

struct Component {
    handshape::BinaryMask mask;
    std::int64_t area = 0;
    int start_x = 0;
    int start_y = 0;
};

// Breadth-first 8-connected labeling; components come out in raster order of
// their top-most then left-most pixel.
inline std::vector<Component> label_components(const handshape::BinaryMask& mask) {
    std::vector<Component> components;
    std::vector<char> seen(static_cast<std::size_t>(mask.width) * mask.height, 0);
    const auto idx = [&](int x, int y) { return static_cast<std::size_t>(y) * mask.width + x; };
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (mask(x, y) == 0 || seen[idx(x, y)]) continue;
            Component comp;
            comp.mask = handshape::BinaryMask(mask.width, mask.height, 0);
            comp.start_x = x;
            comp.start_y = y;
            std::queue<std::pair<int, int>> frontier;
            frontier.emplace(x, y);
            seen[idx(x, y)] = 1;
            while (!frontier.empty()) {
                const auto [px, py] = frontier.front();
                frontier.pop();
                comp.mask(px, py) = 255;
                ++comp.area;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = px + dx;
                        const int ny = py + dy;
                        if (nx < 0 || nx >= mask.width || ny < 0 || ny >= mask.height) continue;
                        if (mask(nx, ny) == 0 || seen[idx(nx, ny)]) continue;
                        seen[idx(nx, ny)] = 1;
                        frontier.emplace(nx, ny);
                    }
                }
            }
            components.push_back(std::move(comp));
        }
    }
    return components;
}

// Background cells 4-connected to the image border (or to outside). Returned
// mask is 255 on exterior background cells.
inline handshape::BinaryMask exterior_background(const handshape::BinaryMask& mask) {
    handshape::BinaryMask ext(mask.width, mask.height, 0);
    std::queue<std::pair<int, int>> frontier;
    const auto push = [&](int x, int y) {
        if (x < 0 || x >= mask.width || y < 0 || y >= mask.height) return;
        if (mask(x, y) != 0 || ext(x, y) != 0) return;
        ext(x, y) = 255;
        frontier.emplace(x, y);
    };
    for (int x = 0; x < mask.width; ++x) {
        push(x, 0);
        push(x, mask.height - 1);
    }
    for (int y = 0; y < mask.height; ++y) {
        push(0, y);
        push(mask.width - 1, y);
    }
    while (!frontier.empty()) {
        const auto [x, y] = frontier.front();
        frontier.pop();
        push(x + 1, y);
        push(x - 1, y);
        push(x, y + 1);
        push(x, y - 1);
    }
    return ext;
}

inline handshape::GrayImage random_gray(std::mt19937& rng, int width, int height) {
    handshape::GrayImage img(width, height);
    std::uniform_int_distribution<int> dist(0, 255);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(dist(rng));
    return img;
}

inline handshape::BinaryMask random_mask(std::mt19937& rng, int width, int height, double density) {
    handshape::BinaryMask mask(width, height);
    std::bernoulli_distribution dist(density);
    for (auto& v : mask.data) v = dist(rng) ? 255 : 0;
    return mask;
}

}  // namespace oracle
