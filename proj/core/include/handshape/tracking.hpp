#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "handshape/matching.hpp"
#include "handshape/moments.hpp"
#include "handshape/segmentation.hpp"

namespace handshape {

inline constexpr std::string_view kNoHandMessage = "No Hand Detected";
inline constexpr std::string_view kRockMessage = "Don't hit me with that rock!";
inline constexpr std::string_view kPaperMessage = "Bye!";

struct TrackerState {
    std::optional<Centroid> prev_centroid;
    double motion_threshold = 15.0;       // pixels, strict comparison
    std::int64_t area_threshold = 1000;   // pixels
    bool euclidean_motion = false;        // default: horizontal displacement only
};

// Which rule produced a NoHand outcome, kept alongside the decision.
enum class NoHandReason { None, NoRegion, SmallArea, LowScore };

std::string_view to_string(NoHandReason reason);

struct FrameDecision {
    ClassLabel label = ClassLabel::NoHand;
    double score = 0.0;  // best template score for the frame
    bool moving = false;
    std::optional<std::string> message;
    std::optional<BoundingBox> box;
    std::optional<Centroid> centroid;
    NoHandReason reason = NoHandReason::None;
};

// One tracking step. The frame is NoHand when the region is absent, its area
// is below area_threshold, or the classifier already said NoHand; such frames
// clear the centroid history. Otherwise motion is a strict horizontal
// comparison against the previous centroid, and moving Rock/Paper hands emit
// their feedback messages.
std::pair<TrackerState, FrameDecision> update(TrackerState state,
                                              const std::optional<Region>& region,
                                              ClassLabel label);

struct PipelineConfig {
    std::uint8_t binary_threshold = 25;
    bool blur_diff = true;  // blur the difference image before thresholding
    BlurSpec diff_blur{5, 1.0};
    MatchConfig match;
    double motion_threshold = 15.0;
    std::int64_t area_threshold = 1000;
    bool euclidean_motion = false;
};

// Full per-frame pipeline in order: background subtraction, thresholding,
// largest region, template classification, tracker update. Throws on
// dimension mismatches or an empty template list.
std::vector<FrameDecision> run_pipeline(std::span<const GrayImage> frames,
                                        const GrayImage& background,
                                        const std::vector<Template>& templates,
                                        const PipelineConfig& cfg);

// One line per frame, fields in fixed order:
//   frame label score moving message box centroid reason
// Absent message/box/centroid and reason None are written as "-".
std::string format_decision(std::size_t frame_index, const FrameDecision& decision);
void write_decision_log(std::ostream& out, std::span<const FrameDecision> decisions);

}  // namespace handshape
