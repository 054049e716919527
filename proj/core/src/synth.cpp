#include "handshape/synth.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "handshape/image_io.hpp"

namespace handshape {

namespace {

constexpr int kTileSize = 56;
constexpr std::uint8_t kTileBackground = 30;
constexpr std::uint8_t kTileForeground = 230;

double distance_to_segment(double px, double py, double ax, double ay, double bx, double by) {
    const double abx = bx - ax;
    const double aby = by - ay;
    const double ab2 = abx * abx + aby * aby;
    double t = 0.0;
    if (ab2 > 0.0) t = std::clamp(((px - ax) * abx + (py - ay) * aby) / ab2, 0.0, 1.0);
    const double cx = ax + t * abx;
    const double cy = ay + t * aby;
    return std::hypot(px - cx, py - cy);
}

void fill_disk(GrayImage& tile, double cx, double cy, double radius) {
    for (int y = 0; y < tile.height; ++y) {
        for (int x = 0; x < tile.width; ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            if (dx * dx + dy * dy <= radius * radius) tile(x, y) = kTileForeground;
        }
    }
}

void fill_bar(GrayImage& tile, Point a, Point b, double thickness) {
    const double radius = thickness / 2.0;
    for (int y = 0; y < tile.height; ++y) {
        for (int x = 0; x < tile.width; ++x) {
            if (distance_to_segment(x, y, a.x, a.y, b.x, b.y) <= radius) {
                tile(x, y) = kTileForeground;
            }
        }
    }
}

std::uint32_t frame_noise_seed(std::uint32_t base, int frame_index) {
    return base + 0x9e3779b9u * static_cast<std::uint32_t>(frame_index + 1);
}

std::string frame_file_name(int index, int frame_count) {
    int digits = 3;
    for (long long bound = 1000; frame_count > bound; bound *= 10) ++digits;
    std::ostringstream name;
    name << "frame_" << std::setw(digits) << std::setfill('0') << index << ".pgm";
    return name.str();
}

std::string template_file_name(ClassLabel label) {
    std::string name(to_string(label));
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return name + ".pgm";
}

void validate(const SynthSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0) throw std::invalid_argument("synth: empty canvas");
    if (!(spec.scale > 0.0)) throw std::invalid_argument("synth: scale must be positive");
    if (spec.noise_sigma < 0.0) throw std::invalid_argument("synth: noise_sigma must be nonnegative");
    if (spec.frame_count <= 0) throw std::invalid_argument("synth: frame_count must be positive");
}

}  // namespace

GrayImage make_shape_template(ClassLabel shape) {
    GrayImage tile(kTileSize, kTileSize, kTileBackground);
    fill_disk(tile, 28, 34, 20);
    const Point hub{28, 22};
    switch (shape) {
        case ClassLabel::Rock:
            break;
        case ClassLabel::Paper:
            for (const Point tip : {Point{6, 4}, Point{17, 2}, Point{28, 1}, Point{39, 2}, Point{50, 4}}) {
                fill_bar(tile, hub, tip, 5.0);
            }
            break;
        case ClassLabel::Scissors:
            fill_bar(tile, hub, Point{12, 2}, 7.0);
            fill_bar(tile, hub, Point{44, 2}, 7.0);
            break;
        case ClassLabel::ThumbsUp:
            fill_bar(tile, Point{36, 24}, Point{46, 2}, 9.0);
            break;
        case ClassLabel::NoHand:
            throw std::invalid_argument("make_shape_template: NoHand has no shape");
    }
    return tile;
}

GrayImage flat_background(int width, int height, std::uint8_t value) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("flat_background: empty canvas");
    return GrayImage(width, height, value);
}

Point sprite_origin(const SynthSpec& spec, int frame_index) {
    return {spec.start_x + frame_index * spec.step_x, spec.start_y + frame_index * spec.step_y};
}

GrayImage render_frame(const SynthSpec& spec, int frame_index, std::uint32_t noise_seed) {
    validate(spec);
    GrayImage frame = flat_background(spec.width, spec.height, spec.background_value);

    if (spec.shape != ClassLabel::NoHand) {
        const GrayImage tile = make_shape_template(spec.shape);
        const GrayImage sprite = spec.scale == 1.0 ? tile : resize_bilinear(tile, 1.0 / spec.scale);
        const Point origin = sprite_origin(spec, frame_index);
        for (int sy = 0; sy < sprite.height; ++sy) {
            const int fy = origin.y + sy;
            if (fy < 0 || fy >= frame.height) continue;
            for (int sx = 0; sx < sprite.width; ++sx) {
                const int fx = origin.x + sx;
                if (fx < 0 || fx >= frame.width) continue;
                frame(fx, fy) = sprite(sx, sy);
            }
        }
    }

    if (spec.noise_sigma > 0.0) {
        std::mt19937 rng(noise_seed);
        std::normal_distribution<double> noise(0.0, spec.noise_sigma);
        for (std::uint8_t& v : frame.data) {
            v = static_cast<std::uint8_t>(std::clamp<long>(std::lround(v + noise(rng)), 0, 255));
        }
    }
    return frame;
}

std::vector<GrayImage> render_sequence(const SynthSpec& spec) {
    validate(spec);
    std::vector<GrayImage> frames;
    frames.reserve(static_cast<std::size_t>(spec.frame_count));
    for (int i = 0; i < spec.frame_count; ++i) {
        frames.push_back(render_frame(spec, i, frame_noise_seed(spec.seed, i)));
    }
    return frames;
}

SynthSpec parse_synth_spec(std::istream& in) {
    SynthSpec spec;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("synth spec line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        }
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        const auto bad = [&](const std::string& why) {
            return std::invalid_argument("synth spec line " + std::to_string(line_no) + ": " + why);
        };
        try {
            if (key == "width") {
                spec.width = std::stoi(value);
            } else if (key == "height") {
                spec.height = std::stoi(value);
            } else if (key == "background_value") {
                const int v = std::stoi(value);
                if (v < 0 || v > 255) throw bad("background_value out of 0..255");
                spec.background_value = static_cast<std::uint8_t>(v);
            } else if (key == "shape") {
                const auto label = parse_class_label(value);
                if (!label) throw bad("unknown shape '" + value + "'");
                spec.shape = *label;
            } else if (key == "scale") {
                spec.scale = std::stod(value);
            } else if (key == "noise_sigma") {
                spec.noise_sigma = std::stod(value);
            } else if (key == "frames") {
                spec.frame_count = std::stoi(value);
            } else if (key == "start_x") {
                spec.start_x = std::stoi(value);
            } else if (key == "start_y") {
                spec.start_y = std::stoi(value);
            } else if (key == "step_x") {
                spec.step_x = std::stoi(value);
            } else if (key == "step_y") {
                spec.step_y = std::stoi(value);
            } else if (key == "seed") {
                spec.seed = static_cast<std::uint32_t>(std::stoul(value));
            } else {
                throw bad("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw bad("bad value '" + value + "' for key '" + key + "'");
        }
    }
    validate(spec);
    return spec;
}

SynthSpec parse_synth_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open synth spec " + path.string());
    return parse_synth_spec(in);
}

void write_sequence(const SynthSpec& spec, const std::filesystem::path& out_dir) {
    validate(spec);
    std::filesystem::create_directories(out_dir / "frames");
    std::filesystem::create_directories(out_dir / "templates");

    save_image(flat_background(spec.width, spec.height, spec.background_value),
               out_dir / "background.pgm");

    {
        std::ofstream manifest(out_dir / "templates" / "manifest.txt");
        if (!manifest) throw std::runtime_error("cannot write template manifest");
        for (ClassLabel label : {ClassLabel::Rock, ClassLabel::Paper, ClassLabel::Scissors,
                                 ClassLabel::ThumbsUp}) {
            const std::string file = template_file_name(label);
            save_image(make_shape_template(label), out_dir / "templates" / file);
            manifest << to_string(label) << ' ' << file << '\n';
        }
    }

    std::ofstream labels(out_dir / "labels.txt");
    if (!labels) throw std::runtime_error("cannot write labels file");
    const std::vector<GrayImage> frames = render_sequence(spec);
    for (int i = 0; i < spec.frame_count; ++i) {
        const std::string name = frame_file_name(i, spec.frame_count);
        save_image(frames[static_cast<std::size_t>(i)], out_dir / "frames" / name);
        labels << "frames/" << name << ' ' << to_string(spec.shape) << '\n';
    }
}

}  // namespace handshape
