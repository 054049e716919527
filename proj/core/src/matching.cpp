#include "handshape/matching.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace handshape {

std::string_view to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::Rock: return "Rock";
        case ClassLabel::Paper: return "Paper";
        case ClassLabel::Scissors: return "Scissors";
        case ClassLabel::ThumbsUp: return "ThumbsUp";
        case ClassLabel::NoHand: return "NoHand";
    }
    throw std::invalid_argument("unknown class label value");
}

std::optional<ClassLabel> parse_class_label(std::string_view text) {
    if (text == "Rock") return ClassLabel::Rock;
    if (text == "Paper") return ClassLabel::Paper;
    if (text == "Scissors") return ClassLabel::Scissors;
    if (text == "ThumbsUp") return ClassLabel::ThumbsUp;
    if (text == "NoHand") return ClassLabel::NoHand;
    return std::nullopt;
}

std::vector<double> default_scales() {
    std::vector<double> scales(10);
    for (int i = 0; i < 10; ++i) scales[static_cast<std::size_t>(i)] = (i + 1) / 10.0;
    return scales;
}

namespace {

// Summed-area table with a zero border row/column; sums of uint8 images and
// their squares stay well inside int64.
struct Integral {
    int width = 0;
    std::vector<std::int64_t> sum;
    std::vector<std::int64_t> sq;

    explicit Integral(const GrayImage& img)
        : width(img.width + 1),
          sum(static_cast<std::size_t>(img.width + 1) * (img.height + 1), 0),
          sq(static_cast<std::size_t>(img.width + 1) * (img.height + 1), 0) {
        for (int y = 0; y < img.height; ++y) {
            std::int64_t row_sum = 0;
            std::int64_t row_sq = 0;
            const std::uint8_t* row = img.row(y);
            for (int x = 0; x < img.width; ++x) {
                const std::int64_t v = row[x];
                row_sum += v;
                row_sq += v * v;
                at(sum, x + 1, y + 1) = at_const(sum, x + 1, y) + row_sum;
                at(sq, x + 1, y + 1) = at_const(sq, x + 1, y) + row_sq;
            }
        }
    }

    std::int64_t& at(std::vector<std::int64_t>& t, int x, int y) {
        return t[static_cast<std::size_t>(y) * width + x];
    }
    std::int64_t at_const(const std::vector<std::int64_t>& t, int x, int y) const {
        return t[static_cast<std::size_t>(y) * width + x];
    }

    std::int64_t window(const std::vector<std::int64_t>& t, int x, int y, int w, int h) const {
        return at_const(t, x + w, y + h) - at_const(t, x, y + h) - at_const(t, x + w, y) +
               at_const(t, x, y);
    }
};

}  // namespace

CorrelationMap ncc_map(const GrayImage& image, const GrayImage& tmpl) {
    if (tmpl.width <= 0 || tmpl.height <= 0) {
        throw std::invalid_argument("ncc_map: empty template");
    }
    if (tmpl.width > image.width || tmpl.height > image.height) {
        throw std::invalid_argument("ncc_map: template larger than image");
    }
    const int tw = tmpl.width;
    const int th = tmpl.height;
    const std::int64_t n = static_cast<std::int64_t>(tw) * th;

    std::int64_t sum_t = 0;
    std::int64_t sq_t = 0;
    for (std::uint8_t v : tmpl.data) {
        sum_t += v;
        sq_t += static_cast<std::int64_t>(v) * v;
    }
    const std::int64_t var_t = n * sq_t - sum_t * sum_t;

    CorrelationMap map;
    map.width = image.width - tw + 1;
    map.height = image.height - th + 1;
    map.values.assign(static_cast<std::size_t>(map.width) * map.height, 0.0);
    if (var_t <= 0) return map;

    const Integral integral(image);

    for (int v = 0; v < map.height; ++v) {
        for (int u = 0; u < map.width; ++u) {
            std::int64_t dot = 0;
            for (int j = 0; j < th; ++j) {
                const std::uint8_t* irow = image.row(v + j) + u;
                const std::uint8_t* trow = tmpl.row(j);
                std::int64_t row_dot = 0;
                for (int i = 0; i < tw; ++i) {
                    row_dot += static_cast<int>(irow[i]) * static_cast<int>(trow[i]);
                }
                dot += row_dot;
            }
            const std::int64_t sum_w = integral.window(integral.sum, u, v, tw, th);
            const std::int64_t sq_w = integral.window(integral.sq, u, v, tw, th);
            const std::int64_t var_w = n * sq_w - sum_w * sum_w;
            if (var_w <= 0) continue;
            const std::int64_t numerator = n * dot - sum_w * sum_t;
            map.values[static_cast<std::size_t>(v) * map.width + u] =
                static_cast<double>(numerator) /
                std::sqrt(static_cast<double>(var_w) * static_cast<double>(var_t));
        }
    }
    return map;
}

MatchResult best_match(const GrayImage& frame, const Template& tmpl, const MatchConfig& cfg) {
    if (cfg.scales.empty()) throw std::invalid_argument("best_match: no scales configured");
    MatchResult best;
    best.label = tmpl.label;
    best.score = -2.0;
    bool any_fit = false;
    for (double scale : cfg.scales) {
        if (!(scale > 0.0)) throw std::invalid_argument("best_match: scales must be positive");
        const GrayImage scaled = scale == 1.0 ? frame : resize_bilinear(frame, scale);
        if (scaled.width < tmpl.image.width || scaled.height < tmpl.image.height) continue;
        any_fit = true;
        const CorrelationMap map = ncc_map(scaled, tmpl.image);
        for (int v = 0; v < map.height; ++v) {
            for (int u = 0; u < map.width; ++u) {
                const double score = map(u, v);
                if (score > best.score) {
                    best.score = score;
                    best.u = static_cast<int>(std::lround(u / scale));
                    best.v = static_cast<int>(std::lround(v / scale));
                    best.scale = scale;
                }
            }
        }
    }
    if (!any_fit) {
        throw std::invalid_argument("best_match: template larger than frame at every scale");
    }
    return best;
}

Classification classify(const GrayImage& frame, const std::vector<Template>& templates,
                        const MatchConfig& cfg) {
    if (templates.empty()) throw std::invalid_argument("classify: no templates");
    for (const Template& t : templates) {
        if (t.image.width < 2 || t.image.height < 2) {
            throw std::invalid_argument("classify: template " + std::string(to_string(t.label)) +
                                        " smaller than 2x2");
        }
        if (t.label == ClassLabel::NoHand) {
            throw std::invalid_argument("classify: NoHand is not a template label");
        }
    }

    const GrayImage* frame_used = &frame;
    GrayImage blurred_frame;
    if (cfg.blur_frame) {
        blurred_frame = gaussian_blur(frame, cfg.template_blur);
        frame_used = &blurred_frame;
    }

    Classification result;
    result.per_template.reserve(templates.size());
    int best_index = -1;
    for (const Template& t : templates) {
        Template blurred{t.label, gaussian_blur(t.image, cfg.template_blur)};
        MatchResult r = best_match(*frame_used, blurred, cfg);
        if (best_index < 0 || r.score > result.per_template[static_cast<std::size_t>(best_index)].score) {
            best_index = static_cast<int>(result.per_template.size());
        }
        result.per_template.push_back(r);
    }
    const MatchResult& top = result.per_template[static_cast<std::size_t>(best_index)];
    result.label = top.score < cfg.accept_threshold ? ClassLabel::NoHand : top.label;
    return result;
}

}  // namespace handshape
