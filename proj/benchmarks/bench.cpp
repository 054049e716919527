#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "handshape/image.hpp"
#include "handshape/matching.hpp"
#include "handshape/segmentation.hpp"
#include "handshape/synth.hpp"

using namespace handshape;

namespace {

GrayImage camera_frame() {
    SynthSpec spec;
    spec.shape = ClassLabel::Paper;
    spec.scale = 0.75;
    spec.noise_sigma = 4.0;
    spec.start_x = 90;
    spec.start_y = 70;
    return render_frame(spec, 0, 7u);
}

std::vector<Template> shape_templates() {
    std::vector<Template> templates;
    for (ClassLabel label : {ClassLabel::Rock, ClassLabel::Paper, ClassLabel::Scissors,
                             ClassLabel::ThumbsUp}) {
        templates.push_back({label, make_shape_template(label)});
    }
    return templates;
}

void bm_ncc_map(benchmark::State& state) {
    const GrayImage frame = camera_frame();
    const GrayImage tmpl = make_shape_template(ClassLabel::Rock);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncc_map(frame, tmpl));
    }
}
BENCHMARK(bm_ncc_map)->Unit(benchmark::kMillisecond);

void bm_classify_frame(benchmark::State& state) {
    const GrayImage frame = camera_frame();
    const std::vector<Template> templates = shape_templates();
    const MatchConfig cfg;  // 4 templates, 10 scales
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(frame, templates, cfg));
    }
}
BENCHMARK(bm_classify_frame)->Unit(benchmark::kMillisecond);

void bm_gaussian_blur(benchmark::State& state) {
    const GrayImage frame = camera_frame();
    const BlurSpec spec{static_cast<int>(state.range(0)), 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gaussian_blur(frame, spec));
    }
}
BENCHMARK(bm_gaussian_blur)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void bm_resize_bilinear(benchmark::State& state) {
    const GrayImage frame = camera_frame();
    const double scale = state.range(0) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(resize_bilinear(frame, scale));
    }
}
BENCHMARK(bm_resize_bilinear)->Arg(3)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_largest_region(benchmark::State& state) {
    std::mt19937 rng(31337u);
    std::bernoulli_distribution speck(0.4);
    BinaryMask mask(320, 240);
    for (auto& v : mask.data) v = speck(rng) ? 255 : 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(largest_region(mask));
    }
}
BENCHMARK(bm_largest_region)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
