#include "handshape/moments.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace handshape;

namespace {

Region region_of(const BinaryMask& mask) {
    const auto region = largest_region(mask);
    REQUIRE(region.has_value());
    return *region;
}

BinaryMask l_shape() {
    // Pixels (0,0), (0,1), (0,2), (1,2): centroid (0.25, 1.25).
    BinaryMask mask(3, 3, 0);
    mask(0, 0) = 255;
    mask(0, 1) = 255;
    mask(0, 2) = 255;
    mask(1, 2) = 255;
    return mask;
}

}  // namespace

TEST_CASE("moment00 counts set pixels whatever their stored value") {
    Region region;
    region.mask = BinaryMask(4, 1, 0);
    region.mask(0, 0) = 255;
    region.mask(2, 0) = 1;  // nonzero counts as one
    CHECK(moment00(region) == 2);
}

TEST_CASE("centroid of the L-shape is the frozen mean position") {
    const Region region = region_of(l_shape());
    CHECK(region.area == 4);
    const Centroid c = centroid(region);
    CHECK(c.cx == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(c.cy == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("centroid of a single pixel is that pixel") {
    BinaryMask mask(5, 5, 0);
    mask(3, 2) = 255;
    const Centroid c = centroid(region_of(mask));
    CHECK(c.cx == 3.0);
    CHECK(c.cy == 2.0);
}

TEST_CASE("centroid rejects an empty region") {
    Region region;
    region.mask = BinaryMask(4, 4, 0);
    CHECK_THROWS_AS(centroid(region), std::invalid_argument);
}

TEST_CASE("bounding_box spans the contour extremes inclusively") {
    const Region region = region_of(l_shape());
    const BoundingBox box = bounding_box(region.contour);
    CHECK(box.x_min == 0);
    CHECK(box.y_min == 0);
    CHECK(box.x_max == 1);
    CHECK(box.y_max == 2);
}

TEST_CASE("bounding_box rejects an empty contour") {
    CHECK_THROWS_AS(bounding_box(Contour{}), std::invalid_argument);
}

TEST_CASE("centroid and moment00 match direct summation on random regions") {
    std::mt19937 rng(909);
    std::uniform_int_distribution<int> size(1, 48);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    int checked = 0;
    while (checked < 500) {
        const BinaryMask mask = oracle::random_mask(rng, size(rng), size(rng), density(rng));
        for (const oracle::Component& comp : oracle::label_components(mask)) {
            Region region;
            region.mask = comp.mask;
            region.area = comp.area;

            std::int64_t count = 0;
            double sx = 0.0;
            double sy = 0.0;
            for (int y = 0; y < comp.mask.height; ++y) {
                for (int x = 0; x < comp.mask.width; ++x) {
                    if (comp.mask(x, y) != 0) {
                        ++count;
                        sx += x;
                        sy += y;
                    }
                }
            }
            REQUIRE(moment00(region) == count);
            const Centroid c = centroid(region);
            REQUIRE(c.cx == doctest::Approx(sx / count).epsilon(1e-9));
            REQUIRE(c.cy == doctest::Approx(sy / count).epsilon(1e-9));
            ++checked;
        }
    }
}

TEST_CASE("translation shifts the centroid exactly") {
    std::mt19937 rng(555);
    for (int round = 0; round < 50; ++round) {
        const BinaryMask mask = oracle::random_mask(rng, 16, 16, 0.4);
        if (oracle::label_components(mask).empty()) continue;
        const auto region = largest_region(mask);
        REQUIRE(region.has_value());

        std::uniform_int_distribution<int> shift(1, 8);
        const int dx = shift(rng);
        const int dy = shift(rng);
        BinaryMask moved(mask.width + 8, mask.height + 8, 0);
        for (int y = 0; y < mask.height; ++y) {
            for (int x = 0; x < mask.width; ++x) {
                if (region->mask(x, y) != 0) moved(x + dx, y + dy) = 255;
            }
        }
        const auto moved_region = largest_region(moved);
        REQUIRE(moved_region.has_value());
        REQUIRE(moved_region->area == region->area);

        // The moment sums shift by exactly area * offset, so the translated
        // centroid must be bit-identical to the shifted-sum quotient. The
        // rearranged form centroid + offset costs one extra rounding, so it
        // only holds to a ulp.
        std::int64_t n = 0;
        std::int64_t sum_x = 0;
        std::int64_t sum_y = 0;
        for (int y = 0; y < mask.height; ++y) {
            for (int x = 0; x < mask.width; ++x) {
                if (region->mask(x, y) != 0) {
                    ++n;
                    sum_x += x;
                    sum_y += y;
                }
            }
        }
        const Centroid before = centroid(*region);
        const Centroid after = centroid(*moved_region);
        CHECK(after.cx == static_cast<double>(sum_x + n * dx) / static_cast<double>(n));
        CHECK(after.cy == static_cast<double>(sum_y + n * dy) / static_cast<double>(n));
        CHECK(after.cx == doctest::Approx(before.cx + dx).epsilon(1e-12));
        CHECK(after.cy == doctest::Approx(before.cy + dy).epsilon(1e-12));
    }
}
