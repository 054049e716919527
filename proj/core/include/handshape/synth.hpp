#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "handshape/image.hpp"
#include "handshape/matching.hpp"
#include "handshape/segmentation.hpp"

namespace handshape {

// 56x56 grayscale tile for one shape, foreground 230 on background 30.
// Geometry is fixed so rendered corpora are stable across runs.
// NoHand is not a renderable shape.
GrayImage make_shape_template(ClassLabel shape);

GrayImage flat_background(int width, int height, std::uint8_t value);

// One synthetic sequence: a shape sprite pasted onto a flat background,
// moving by (step_x, step_y) per frame. The sprite is the shape tile
// enlarged by 1/scale, so a multiscale search over the frame peaks near
// `scale`. shape = NoHand renders empty frames.
struct SynthSpec {
    int width = 320;
    int height = 240;
    std::uint8_t background_value = 30;
    ClassLabel shape = ClassLabel::Rock;
    double scale = 1.0;
    double noise_sigma = 0.0;
    int frame_count = 1;
    int start_x = 0;
    int start_y = 0;
    int step_x = 0;
    int step_y = 0;
    std::uint32_t seed = 0;
};

// "key = value" lines; keys match the SynthSpec fields (width, height,
// background_value, shape, scale, noise_sigma, frames, start_x, start_y,
// step_x, step_y, seed). '#' comments and blank lines skipped.
SynthSpec parse_synth_spec(std::istream& in);
SynthSpec parse_synth_spec_file(const std::filesystem::path& path);

// Sprite position for frame i before clipping.
Point sprite_origin(const SynthSpec& spec, int frame_index);

GrayImage render_frame(const SynthSpec& spec, int frame_index, std::uint32_t noise_seed);
std::vector<GrayImage> render_sequence(const SynthSpec& spec);

// Writes background.pgm, frames/frame_NNN.pgm, templates/<shape>.pgm for all
// four shapes, templates/manifest.txt, and labels.txt pairing each frame
// with spec.shape.
void write_sequence(const SynthSpec& spec, const std::filesystem::path& out_dir);

}  // namespace handshape
