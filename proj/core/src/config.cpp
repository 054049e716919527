#include "handshape/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace handshape {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("config " + key + ": expected a number, got '" + value + "'");
    }
    if (consumed != value.size()) {
        throw std::invalid_argument("config " + key + ": trailing junk in '" + value + "'");
    }
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("config " + key + ": expected an integer, got '" + value + "'");
    }
    if (consumed != value.size()) {
        throw std::invalid_argument("config " + key + ": trailing junk in '" + value + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "on") return true;
    if (value == "false" || value == "0" || value == "off") return false;
    throw std::invalid_argument("config " + key + ": expected true/false, got '" + value + "'");
}

}  // namespace

std::vector<double> parse_scale_list(const std::string& text) {
    std::vector<double> scales;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw std::invalid_argument("scales: empty entry");
        const double s = parse_double("scales", item);
        if (!(s > 0.0)) throw std::invalid_argument("scales: entries must be positive");
        if (!scales.empty() && s <= scales.back()) {
            throw std::invalid_argument("scales: entries must be strictly increasing");
        }
        scales.push_back(s);
    }
    if (scales.empty()) throw std::invalid_argument("scales: empty list");
    return scales;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "templates") {
        cfg.templates = value;
    } else if (key == "background") {
        cfg.background = value;
    } else if (key == "binary_threshold") {
        const long long v = parse_int(key, value);
        if (v < 0 || v > 255) throw std::invalid_argument("config binary_threshold: out of 0..255");
        cfg.binary_threshold = static_cast<int>(v);
    } else if (key == "accept_threshold") {
        const double v = parse_double(key, value);
        if (v < -1.0 || v > 1.0) throw std::invalid_argument("config accept_threshold: out of -1..1");
        cfg.accept_threshold = v;
    } else if (key == "scales") {
        cfg.scales = parse_scale_list(value);
    } else if (key == "blur_kernel_size") {
        const long long v = parse_int(key, value);
        if (v <= 0 || v % 2 == 0) throw std::invalid_argument("config blur_kernel_size: must be odd and positive");
        cfg.blur_kernel_size = static_cast<int>(v);
    } else if (key == "blur_sigma") {
        const double v = parse_double(key, value);
        if (!(v > 0.0)) throw std::invalid_argument("config blur_sigma: must be positive");
        cfg.blur_sigma = v;
    } else if (key == "blur_frame") {
        cfg.blur_frame = parse_bool(key, value);
    } else if (key == "blur_diff") {
        cfg.blur_diff = parse_bool(key, value);
    } else if (key == "motion_threshold") {
        const double v = parse_double(key, value);
        if (v < 0.0) throw std::invalid_argument("config motion_threshold: must be nonnegative");
        cfg.motion_threshold = v;
    } else if (key == "area_threshold") {
        const long long v = parse_int(key, value);
        if (v < 0) throw std::invalid_argument("config area_threshold: must be nonnegative");
        cfg.area_threshold = v;
    } else if (key == "euclidean_motion") {
        cfg.euclidean_motion = parse_bool(key, value);
    } else if (key == "out") {
        cfg.out = value;
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void parse_config_stream(RunConfig& cfg, std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": missing key");
        }
        try {
            apply_key(cfg, key, value);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void parse_config_file(RunConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    parse_config_stream(cfg, in);
}

MatchConfig make_match_config(const RunConfig& cfg) {
    MatchConfig mc;
    mc.scales = cfg.scales;
    mc.accept_threshold = cfg.accept_threshold;
    mc.template_blur = BlurSpec{cfg.blur_kernel_size, cfg.blur_sigma};
    mc.blur_frame = cfg.blur_frame;
    return mc;
}

PipelineConfig make_pipeline_config(const RunConfig& cfg) {
    PipelineConfig pc;
    pc.binary_threshold = static_cast<std::uint8_t>(cfg.binary_threshold);
    pc.blur_diff = cfg.blur_diff;
    pc.diff_blur = BlurSpec{cfg.blur_kernel_size, cfg.blur_sigma};
    pc.match = make_match_config(cfg);
    pc.motion_threshold = cfg.motion_threshold;
    pc.area_threshold = cfg.area_threshold;
    pc.euclidean_motion = cfg.euclidean_motion;
    return pc;
}

}  // namespace handshape
