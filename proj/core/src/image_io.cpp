#include "handshape/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace handshape {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

// Skips PNM whitespace and '#' comments, then reads one unsigned decimal.
int read_pnm_int(std::istream& in, const char* what) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) fail(std::string("pnm: expected ") + what);
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > std::numeric_limits<int>::max() / 2) fail(std::string("pnm: ") + what + " out of range");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return static_cast<int>(value);
}

void read_raster(std::istream& in, std::vector<std::uint8_t>& data) {
    // Exactly one whitespace byte separates the header from the raster.
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) fail("pnm: missing raster separator");
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (static_cast<std::size_t>(in.gcount()) != data.size()) fail("pnm: truncated raster");
}

struct PngReadCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngReadCloser() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

LoadedImage load_png(const std::filesystem::path& path) {
    PngReadCloser h;
    h.fp = std::fopen(path.string().c_str(), "rb");
    if (!h.fp) fail("cannot open " + path.string());
    h.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!h.png) fail("png: allocation failed");
    h.info = png_create_info_struct(h.png);
    if (!h.info) fail("png: allocation failed");
    if (setjmp(png_jmpbuf(h.png))) fail("png: malformed file " + path.string());

    png_init_io(h.png, h.fp);
    png_read_info(h.png, h.info);

    const png_uint_32 w = png_get_image_width(h.png, h.info);
    const png_uint_32 h_px = png_get_image_height(h.png, h.info);
    const int color_type = png_get_color_type(h.png, h.info);
    const int bit_depth = png_get_bit_depth(h.png, h.info);

    if (bit_depth == 16) png_set_strip_16(h.png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(h.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(h.png);
    if (png_get_valid(h.png, h.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(h.png);
    png_set_strip_alpha(h.png);
    png_read_update_info(h.png, h.info);

    const int channels = png_get_channels(h.png, h.info);
    const bool color = channels >= 3;
    if (channels != 1 && channels != 3) fail("png: unsupported channel layout in " + path.string());

    std::vector<std::uint8_t> raster(static_cast<std::size_t>(w) * h_px * channels);
    std::vector<png_bytep> rows(h_px);
    for (png_uint_32 y = 0; y < h_px; ++y) {
        rows[y] = raster.data() + static_cast<std::size_t>(y) * w * channels;
    }
    png_read_image(h.png, rows.data());
    png_read_end(h.png, nullptr);

    if (color) {
        RgbImage img(static_cast<int>(w), static_cast<int>(h_px));
        img.data = std::move(raster);
        return img;
    }
    GrayImage img(static_cast<int>(w), static_cast<int>(h_px));
    img.data = std::move(raster);
    return img;
}

struct PngWriteCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngWriteCloser() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        if (fp) std::fclose(fp);
    }
};

void save_png(const std::filesystem::path& path, int width, int height, bool color,
              const std::uint8_t* data) {
    PngWriteCloser h;
    h.fp = std::fopen(path.string().c_str(), "wb");
    if (!h.fp) fail("cannot write " + path.string());
    h.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!h.png) fail("png: allocation failed");
    h.info = png_create_info_struct(h.png);
    if (!h.info) fail("png: allocation failed");
    if (setjmp(png_jmpbuf(h.png))) fail("png: write failed for " + path.string());

    png_init_io(h.png, h.fp);
    const int channels = color ? 3 : 1;
    png_set_IHDR(h.png, h.info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 color ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(h.png, h.info);
    std::vector<png_bytep> rows(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) {
        rows[static_cast<std::size_t>(y)] =
            const_cast<png_bytep>(data + static_cast<std::size_t>(y) * width * channels);
    }
    png_write_image(h.png, rows.data());
    png_write_end(h.png, nullptr);
}

bool has_extension(const std::filesystem::path& path, std::string_view ext) {
    std::string e = path.extension().string();
    for (char& c : e) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return e == ext;
}

}  // namespace

LoadedImage read_pnm(std::istream& in) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6')) {
        fail("pnm: not a binary PGM/PPM stream");
    }
    const bool color = magic[1] == '6';
    const int width = read_pnm_int(in, "width");
    const int height = read_pnm_int(in, "height");
    const int maxval = read_pnm_int(in, "maxval");
    if (width <= 0 || height <= 0) fail("pnm: bad dimensions");
    if (maxval <= 0 || maxval > 255) fail("pnm: only 8-bit samples supported");
    if (color) {
        RgbImage img(width, height);
        read_raster(in, img.data);
        return img;
    }
    GrayImage img(width, height);
    read_raster(in, img.data);
    return img;
}

void write_pgm(std::ostream& out, const GrayImage& img) {
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (!out) fail("pgm: write failed");
}

void write_ppm(std::ostream& out, const RgbImage& img) {
    out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (!out) fail("ppm: write failed");
}

LoadedImage load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path.string());
    char magic[8] = {};
    in.read(magic, 8);
    const std::streamsize got = in.gcount();
    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (got >= 8 && std::equal(png_sig, png_sig + 8, reinterpret_cast<unsigned char*>(magic))) {
        in.close();
        return load_png(path);
    }
    if (got >= 2 && magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6')) {
        in.clear();
        in.seekg(0);
        return read_pnm(in);
    }
    fail("unrecognized image format: " + path.string());
}

GrayImage load_gray(const std::filesystem::path& path) {
    LoadedImage img = load_image(path);
    if (auto* gray = std::get_if<GrayImage>(&img)) return std::move(*gray);
    return to_grayscale(std::get<RgbImage>(img));
}

void save_image(const GrayImage& img, const std::filesystem::path& path) {
    if (img.width <= 0 || img.height <= 0) throw std::invalid_argument("save_image: empty image");
    if (has_extension(path, ".pgm")) {
        std::ofstream out(path, std::ios::binary);
        if (!out) fail("cannot write " + path.string());
        write_pgm(out, img);
        return;
    }
    if (has_extension(path, ".png")) {
        save_png(path, img.width, img.height, false, img.data.data());
        return;
    }
    throw std::invalid_argument("save_image: unsupported extension for grayscale: " + path.string());
}

void save_image(const RgbImage& img, const std::filesystem::path& path) {
    if (img.width <= 0 || img.height <= 0) throw std::invalid_argument("save_image: empty image");
    if (has_extension(path, ".ppm")) {
        std::ofstream out(path, std::ios::binary);
        if (!out) fail("cannot write " + path.string());
        write_ppm(out, img);
        return;
    }
    if (has_extension(path, ".png")) {
        save_png(path, img.width, img.height, true, img.data.data());
        return;
    }
    throw std::invalid_argument("save_image: unsupported extension for color: " + path.string());
}

}  // namespace handshape
