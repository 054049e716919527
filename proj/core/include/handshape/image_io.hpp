#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "handshape/image.hpp"

namespace handshape {

using LoadedImage = std::variant<GrayImage, RgbImage>;

// Loads a PGM (P5), PPM (P6) or PNG file; the format is detected from the
// file's magic bytes, not the extension. Only 8-bit samples are supported.
// Throws std::runtime_error on unreadable or malformed input.
LoadedImage load_image(const std::filesystem::path& path);

// Like load_image, converting color input to grayscale.
GrayImage load_gray(const std::filesystem::path& path);

// Saves by extension: ".pgm" (binary P5) or ".png" for grayscale.
void save_image(const GrayImage& img, const std::filesystem::path& path);
// Saves by extension: ".ppm" (binary P6) or ".png" for color.
void save_image(const RgbImage& img, const std::filesystem::path& path);

// Stream-level PNM codec. Writers emit "P5\n<w> <h>\n255\n" / "P6\n..."
// followed by raw samples; round-trips are bit-exact.
LoadedImage read_pnm(std::istream& in);
void write_pgm(std::ostream& out, const GrayImage& img);
void write_ppm(std::ostream& out, const RgbImage& img);

}  // namespace handshape
