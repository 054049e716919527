#include "handshape/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace handshape {

namespace {

int clamp_index(int v, int hi) { return std::clamp(v, 0, hi); }

std::uint8_t round_to_u8(double v) {
    return static_cast<std::uint8_t>(std::clamp<long>(std::lround(v), 0, 255));
}

std::vector<double> gaussian_kernel(const BlurSpec& spec) {
    if (spec.kernel_size <= 0 || spec.kernel_size % 2 == 0) {
        throw std::invalid_argument("gaussian_blur: kernel_size must be odd and positive, got " +
                                    std::to_string(spec.kernel_size));
    }
    if (!(spec.sigma > 0.0)) {
        throw std::invalid_argument("gaussian_blur: sigma must be positive");
    }
    const int k = spec.kernel_size;
    const int half = k / 2;
    std::vector<double> w(static_cast<std::size_t>(k) * k);
    double total = 0.0;
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) {
            const double dx = i - half;
            const double dy = j - half;
            const double v = std::exp(-(dx * dx + dy * dy) / (2.0 * spec.sigma * spec.sigma));
            w[static_cast<std::size_t>(j) * k + i] = v;
            total += v;
        }
    }
    for (double& v : w) v /= total;
    return w;
}

}  // namespace

GrayImage to_grayscale(const RgbImage& img) {
    GrayImage out(img.width, img.height);
    const std::uint8_t* src = img.data.data();
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        const double r = src[i * 3 + 0];
        const double g = src[i * 3 + 1];
        const double b = src[i * 3 + 2];
        out.data[i] = round_to_u8(0.299 * r + 0.587 * g + 0.114 * b);
    }
    return out;
}

GrayImage gaussian_blur(const GrayImage& img, const BlurSpec& spec) {
    const std::vector<double> w = gaussian_kernel(spec);
    const int k = spec.kernel_size;
    const int half = k / 2;
    GrayImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int j = 0; j < k; ++j) {
                const int sy = clamp_index(y + j - half, img.height - 1);
                for (int i = 0; i < k; ++i) {
                    const int sx = clamp_index(x + i - half, img.width - 1);
                    acc += w[static_cast<std::size_t>(j) * k + i] * img(sx, sy);
                }
            }
            out(x, y) = round_to_u8(acc);
        }
    }
    return out;
}

GrayImage resize_bilinear(const GrayImage& img, double scale) {
    if (!(scale > 0.0)) {
        throw std::invalid_argument("resize_bilinear: scale must be positive");
    }
    if (img.width <= 0 || img.height <= 0) {
        throw std::invalid_argument("resize_bilinear: empty image");
    }
    const int out_w = std::max(1, static_cast<int>(std::lround(img.width * scale)));
    const int out_h = std::max(1, static_cast<int>(std::lround(img.height * scale)));
    GrayImage out(out_w, out_h);
    for (int y = 0; y < out_h; ++y) {
        const double sy = std::clamp((y + 0.5) / scale - 0.5, 0.0, static_cast<double>(img.height - 1));
        const int y0 = static_cast<int>(sy);
        const int y1 = std::min(y0 + 1, img.height - 1);
        const double fy = sy - y0;
        for (int x = 0; x < out_w; ++x) {
            const double sx = std::clamp((x + 0.5) / scale - 0.5, 0.0, static_cast<double>(img.width - 1));
            const int x0 = static_cast<int>(sx);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const double fx = sx - x0;
            const double top = (1.0 - fx) * img(x0, y0) + fx * img(x1, y0);
            const double bottom = (1.0 - fx) * img(x0, y1) + fx * img(x1, y1);
            out(x, y) = round_to_u8((1.0 - fy) * top + fy * bottom);
        }
    }
    return out;
}

}  // namespace handshape
