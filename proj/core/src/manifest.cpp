#include "handshape/manifest.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "handshape/image_io.hpp"

namespace handshape {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::istream& in) {
    std::vector<ManifestEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto space = line.find_first_of(" \t");
        if (space == std::string::npos) {
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": expected '<label> <path>'");
        }
        const std::string label_text = line.substr(0, space);
        const std::string path = trim(line.substr(space + 1));
        const auto label = parse_class_label(label_text);
        if (!label) {
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": unknown label '" + label_text + "'");
        }
        if (*label == ClassLabel::NoHand) {
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": NoHand is not a template label");
        }
        if (path.empty()) {
            throw std::runtime_error("manifest line " + std::to_string(line_no) + ": missing path");
        }
        entries.push_back({*label, path});
    }
    return entries;
}

std::vector<Template> load_templates(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest " + manifest_path.string());
    const std::vector<ManifestEntry> entries = parse_manifest(in);
    if (entries.empty()) throw std::runtime_error("manifest has no entries: " + manifest_path.string());

    const std::filesystem::path base = manifest_path.parent_path();
    std::vector<Template> templates;
    templates.reserve(entries.size());
    for (const ManifestEntry& entry : entries) {
        std::filesystem::path image_path(entry.path);
        if (image_path.is_relative()) image_path = base / image_path;
        Template t{entry.label, load_gray(image_path)};
        if (t.image.width < 2 || t.image.height < 2) {
            throw std::runtime_error("template smaller than 2x2: " + image_path.string());
        }
        templates.push_back(std::move(t));
    }
    return templates;
}

}  // namespace handshape
