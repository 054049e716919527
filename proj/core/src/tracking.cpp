#include "handshape/tracking.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace handshape {

std::string_view to_string(NoHandReason reason) {
    switch (reason) {
        case NoHandReason::None: return "none";
        case NoHandReason::NoRegion: return "no-region";
        case NoHandReason::SmallArea: return "small-area";
        case NoHandReason::LowScore: return "low-score";
    }
    throw std::invalid_argument("unknown NoHandReason value");
}

std::pair<TrackerState, FrameDecision> update(TrackerState state,
                                              const std::optional<Region>& region,
                                              ClassLabel label) {
    FrameDecision decision;
    if (!region) {
        decision.reason = NoHandReason::NoRegion;
    } else if (region->area < state.area_threshold) {
        decision.reason = NoHandReason::SmallArea;
    } else if (label == ClassLabel::NoHand) {
        decision.reason = NoHandReason::LowScore;
    }

    if (decision.reason != NoHandReason::None) {
        decision.label = ClassLabel::NoHand;
        decision.message = std::string(kNoHandMessage);
        state.prev_centroid.reset();
        return {std::move(state), std::move(decision)};
    }

    decision.label = label;
    const Centroid c = centroid(*region);
    decision.centroid = c;
    decision.box = bounding_box(region->contour);
    if (state.prev_centroid) {
        const double dx = std::abs(c.cx - state.prev_centroid->cx);
        if (state.euclidean_motion) {
            const double dy = std::abs(c.cy - state.prev_centroid->cy);
            decision.moving = std::hypot(dx, dy) > state.motion_threshold;
        } else {
            decision.moving = dx > state.motion_threshold;
        }
    }
    if (decision.moving && label == ClassLabel::Rock) {
        decision.message = std::string(kRockMessage);
    } else if (decision.moving && label == ClassLabel::Paper) {
        decision.message = std::string(kPaperMessage);
    }
    state.prev_centroid = c;
    return {std::move(state), std::move(decision)};
}

std::vector<FrameDecision> run_pipeline(std::span<const GrayImage> frames,
                                        const GrayImage& background,
                                        const std::vector<Template>& templates,
                                        const PipelineConfig& cfg) {
    std::vector<FrameDecision> decisions;
    decisions.reserve(frames.size());
    TrackerState state;
    state.motion_threshold = cfg.motion_threshold;
    state.area_threshold = cfg.area_threshold;
    state.euclidean_motion = cfg.euclidean_motion;

    for (const GrayImage& frame : frames) {
        GrayImage diff = abs_diff(background, frame);
        if (cfg.blur_diff) diff = gaussian_blur(diff, cfg.diff_blur);
        const BinaryMask mask = threshold_binary(diff, cfg.binary_threshold);
        const std::optional<Region> region = largest_region(mask);

        const Classification cls = classify(frame, templates, cfg.match);
        double best_score = cls.per_template.front().score;
        for (const MatchResult& r : cls.per_template) best_score = std::max(best_score, r.score);

        auto [next_state, decision] = update(std::move(state), region, cls.label);
        state = std::move(next_state);
        decision.score = best_score;
        decisions.push_back(std::move(decision));
    }
    return decisions;
}

std::string format_decision(std::size_t frame_index, const FrameDecision& decision) {
    std::ostringstream out;
    out << frame_index << ' ' << to_string(decision.label) << ' ' << std::fixed
        << std::setprecision(4) << decision.score << (decision.moving ? " moving" : " still");
    if (decision.message) {
        out << " \"" << *decision.message << '"';
    } else {
        out << " -";
    }
    if (decision.box) {
        out << ' ' << decision.box->x_min << ',' << decision.box->y_min << ','
            << decision.box->x_max << ',' << decision.box->y_max;
    } else {
        out << " -";
    }
    if (decision.centroid) {
        out << ' ' << std::setprecision(2) << decision.centroid->cx << ','
            << decision.centroid->cy;
    } else {
        out << " -";
    }
    if (decision.reason == NoHandReason::None) {
        out << " -";
    } else {
        out << ' ' << to_string(decision.reason);
    }
    return out.str();
}

void write_decision_log(std::ostream& out, std::span<const FrameDecision> decisions) {
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        out << format_decision(i, decisions[i]) << '\n';
    }
}

}  // namespace handshape
