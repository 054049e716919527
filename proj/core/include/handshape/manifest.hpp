#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "handshape/matching.hpp"

namespace handshape {

struct ManifestEntry {
    ClassLabel label = ClassLabel::Rock;
    std::string path;
};

// Template manifest: one "<Label> <image path>" entry per line, '#' comments
// and blank lines skipped. Entry order defines classification tie-break
// order. NoHand is not a valid template label.
std::vector<ManifestEntry> parse_manifest(std::istream& in);

// Parses the manifest and loads every template as grayscale. Relative image
// paths are resolved against the manifest's directory.
std::vector<Template> load_templates(const std::filesystem::path& manifest_path);

}  // namespace handshape
