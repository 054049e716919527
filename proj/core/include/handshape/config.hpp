#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "handshape/tracking.hpp"

namespace handshape {

// Runtime settings shared by the command-line tools. Values start at the
// built-in defaults, a config file may override them, and explicit
// command-line flags win over both.
struct RunConfig {
    std::string templates;
    std::string background;
    int binary_threshold = 25;
    double accept_threshold = 0.74;
    std::vector<double> scales = default_scales();
    int blur_kernel_size = 5;
    double blur_sigma = 1.0;
    bool blur_frame = false;
    bool blur_diff = true;
    double motion_threshold = 15.0;
    std::int64_t area_threshold = 1000;
    bool euclidean_motion = false;
    std::string out;
};

// Comma-separated positive reals, e.g. "0.5,0.75,1.0".
std::vector<double> parse_scale_list(const std::string& text);

// Applies one "key = value" setting. Throws std::invalid_argument for
// unknown keys or unparseable values.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

// Plain-text config: "key = value" per line, '#' comments and blank lines
// skipped. Same keys as apply_key.
void parse_config_stream(RunConfig& cfg, std::istream& in);
void parse_config_file(RunConfig& cfg, const std::filesystem::path& path);

MatchConfig make_match_config(const RunConfig& cfg);
PipelineConfig make_pipeline_config(const RunConfig& cfg);

}  // namespace handshape
