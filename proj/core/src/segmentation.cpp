#include "handshape/segmentation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace handshape {

namespace {

// Clockwise ring around a pixel in image coordinates (y grows downward),
// starting west: W, NW, N, NE, E, SE, S, SW.
constexpr int kRingDx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kRingDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int ring_index(int dx, int dy) {
    for (int i = 0; i < 8; ++i) {
        if (kRingDx[i] == dx && kRingDy[i] == dy) return i;
    }
    throw std::logic_error("contour step between non-adjacent pixels");
}

int chain_direction(Point from, Point to) {
    const int dx = to.x - from.x;
    const int dy = to.y - from.y;
    for (int i = 0; i < 8; ++i) {
        if (kChainDx[i] == dx && kChainDy[i] == dy) return i;
    }
    throw std::logic_error("contour step between non-adjacent pixels");
}

bool is_set(const BinaryMask& mask, int x, int y) {
    return mask.in_bounds(x, y) && mask(x, y) != 0;
}

std::vector<std::uint8_t> chain_codes_for(const std::vector<Point>& points) {
    if (points.size() == 1) return {0};
    std::vector<std::uint8_t> codes(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        codes[i] = static_cast<std::uint8_t>(chain_direction(points[i], points[(i + 1) % points.size()]));
    }
    return codes;
}

// Moore-neighbor boundary walk from the component's top-most then left-most
// pixel, scanning the 8-ring clockwise from just past the entry direction.
// The walk is deterministic over (pixel, entry) states, so it must eventually
// revisit a state; the closed boundary is the cycle of that trajectory, which
// covers patterns where the start state itself is never re-entered.
Contour trace_contour(const BinaryMask& mask, int sx, int sy) {
    bool any_neighbor = false;
    for (int i = 0; i < 8 && !any_neighbor; ++i) {
        any_neighbor = is_set(mask, sx + kRingDx[i], sy + kRingDy[i]);
    }
    if (!any_neighbor) {
        Contour c;
        c.points = {{sx, sy}};
        c.chain_code = {0};
        return c;
    }

    std::vector<Point> walk;
    std::unordered_map<std::int64_t, std::size_t> first_seen;
    Point cur{sx, sy};
    int entry = 0;  // ring slot holding the pixel the walk entered from; west of the start

    std::size_t cycle_begin = 0;
    while (true) {
        const std::int64_t key =
            (static_cast<std::int64_t>(cur.y) * mask.width + cur.x) * 8 + entry;
        const auto [it, inserted] = first_seen.emplace(key, walk.size());
        if (!inserted) {
            cycle_begin = it->second;
            break;
        }
        walk.push_back(cur);

        int found = -1;
        for (int step = 1; step <= 8; ++step) {
            const int slot = (entry + step) % 8;
            if (is_set(mask, cur.x + kRingDx[slot], cur.y + kRingDy[slot])) {
                found = slot;
                break;
            }
        }
        if (found < 0) throw std::logic_error("contour walk lost the component");
        const Point prev = cur;
        const Point before{prev.x + kRingDx[(found + 7) % 8], prev.y + kRingDy[(found + 7) % 8]};
        cur = Point{prev.x + kRingDx[found], prev.y + kRingDy[found]};
        entry = ring_index(before.x - cur.x, before.y - cur.y);
    }

    std::vector<Point> cycle(walk.begin() + static_cast<std::ptrdiff_t>(cycle_begin), walk.end());
    const auto first = std::min_element(cycle.begin(), cycle.end(), [](Point a, Point b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    std::rotate(cycle.begin(), first, cycle.end());

    Contour c;
    c.points = std::move(cycle);
    c.chain_code = chain_codes_for(c.points);
    return c;
}

// 8-connected flood fill from (sx, sy) over set pixels.
Region fill_from(const BinaryMask& mask, int sx, int sy, Contour contour) {
    Region region;
    region.mask = BinaryMask(mask.width, mask.height, 0);
    std::vector<Point> stack{{sx, sy}};
    region.mask(sx, sy) = 255;
    region.area = 1;
    while (!stack.empty()) {
        const Point p = stack.back();
        stack.pop_back();
        for (int i = 0; i < 8; ++i) {
            const int nx = p.x + kRingDx[i];
            const int ny = p.y + kRingDy[i];
            if (is_set(mask, nx, ny) && region.mask(nx, ny) == 0) {
                region.mask(nx, ny) = 255;
                ++region.area;
                stack.push_back({nx, ny});
            }
        }
    }
    region.contour = std::move(contour);
    return region;
}

}  // namespace

GrayImage abs_diff(const GrayImage& background, const GrayImage& frame) {
    if (!background.same_size(frame)) {
        throw std::invalid_argument("abs_diff: dimension mismatch");
    }
    GrayImage out(background.width, background.height);
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        const int d = static_cast<int>(background.data[i]) - static_cast<int>(frame.data[i]);
        out.data[i] = static_cast<std::uint8_t>(d < 0 ? -d : d);
    }
    return out;
}

BinaryMask threshold_binary(const GrayImage& diff, std::uint8_t threshold) {
    BinaryMask out(diff.width, diff.height);
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = diff.data[i] > threshold ? 255 : 0;
    }
    return out;
}

std::vector<Contour> find_contours(const BinaryMask& mask) {
    std::vector<Contour> contours;
    BinaryMask claimed(mask.width, mask.height, 0);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (mask(x, y) == 0 || claimed(x, y) != 0) continue;
            Contour contour = trace_contour(mask, x, y);
            // Claim the whole component so later rows do not restart it.
            std::vector<Point> stack{{x, y}};
            claimed(x, y) = 255;
            while (!stack.empty()) {
                const Point p = stack.back();
                stack.pop_back();
                for (int i = 0; i < 8; ++i) {
                    const int nx = p.x + kRingDx[i];
                    const int ny = p.y + kRingDy[i];
                    if (is_set(mask, nx, ny) && claimed(nx, ny) == 0) {
                        claimed(nx, ny) = 255;
                        stack.push_back({nx, ny});
                    }
                }
            }
            contours.push_back(std::move(contour));
        }
    }
    return contours;
}

Region fill_region(const Contour& contour, const BinaryMask& mask) {
    if (contour.points.empty()) throw std::invalid_argument("fill_region: empty contour");
    const Point start = contour.points.front();
    if (!mask.in_bounds(start.x, start.y)) {
        throw std::invalid_argument("fill_region: contour start out of bounds");
    }
    if (mask(start.x, start.y) == 0) {
        throw std::invalid_argument("fill_region: contour start on background");
    }
    return fill_from(mask, start.x, start.y, contour);
}

std::optional<Region> largest_region(const BinaryMask& mask) {
    std::optional<Region> best;
    for (Contour& contour : find_contours(mask)) {
        Region region = fill_region(contour, mask);
        if (!best || region.area > best->area) best = std::move(region);
    }
    return best;
}

}  // namespace handshape
