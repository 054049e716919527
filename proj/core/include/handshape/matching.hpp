#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "handshape/image.hpp"

namespace handshape {

enum class ClassLabel { Rock, Paper, Scissors, ThumbsUp, NoHand };

std::string_view to_string(ClassLabel label);
std::optional<ClassLabel> parse_class_label(std::string_view text);

// A labeled reference image. The image must be at least 2x2 so the NCC
// denominator can be nonzero.
struct Template {
    ClassLabel label = ClassLabel::Rock;
    GrayImage image;
};

// Grid of correlation values over all template placements; width/height are
// (image_dim - template_dim + 1) per axis.
struct CorrelationMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    double operator()(int u, int v) const {
        return values[static_cast<std::size_t>(v) * width + u];
    }
};

// Best placement of one template: score is the peak correlation, (u, v) the
// top-left placement in original-frame coordinates, scale the frame scale
// the peak was found at.
struct MatchResult {
    ClassLabel label = ClassLabel::NoHand;
    double score = 0.0;
    int u = 0;
    int v = 0;
    double scale = 1.0;
};

std::vector<double> default_scales();  // {0.1, 0.2, ..., 1.0}

struct MatchConfig {
    std::vector<double> scales = default_scales();  // strictly increasing, in (0, 1]
    double accept_threshold = 0.74;
    BlurSpec template_blur{5, 1.0};
    bool blur_frame = false;  // templates are always blurred; the frame only on request
};

// Normalized cross-correlation of the template against every same-size
// window of the image, both taken zero-mean. Windows or templates with zero
// variance map to 0. Throws when the template exceeds the image in either
// dimension.
CorrelationMap ncc_map(const GrayImage& image, const GrayImage& tmpl);

// Global correlation peak across all configured scales. The frame (not the
// template) is resized by each scale; scales where it no longer contains the
// template are skipped. Ties are broken toward the smaller scale, then the
// smaller v, then the smaller u. Throws when no scale fits.
MatchResult best_match(const GrayImage& frame, const Template& tmpl, const MatchConfig& cfg);

struct Classification {
    ClassLabel label = ClassLabel::NoHand;
    std::vector<MatchResult> per_template;  // declaration order of the input templates
};

// Blurs each template with cfg.template_blur, matches all of them, and picks
// the label with the highest score (declaration order breaks ties). Scores
// strictly below cfg.accept_threshold yield NoHand. Per-template results are
// always returned. Throws on an empty template list.
Classification classify(const GrayImage& frame, const std::vector<Template>& templates,
                        const MatchConfig& cfg);

}  // namespace handshape
