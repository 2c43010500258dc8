// Serial reference vs OpenMP kernels. Arg(0) is serial, Arg(1) parallel.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "fairqa/augment.hpp"
#include "fairqa/edc.hpp"
#include "fairqa/quality.hpp"
#include "fairqa/regions.hpp"
#include "fairqa/synth.hpp"

using namespace fairqa;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

RgbImage noise_image(int w, int h) {
    std::mt19937 rng(1);
    RgbImage img(w, h);
    for (auto& p : img.pixels()) {
        p = {static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())};
    }
    return img;
}

void BM_LuminanceCounts(benchmark::State& state) {
    const auto img = noise_image(1024, 1024);
    for (auto _ : state) benchmark::DoNotOptimize(quality::luminance_counts(img.pixels(), exec_of(state)));
    state.SetItemsProcessed(state.iterations() * 1024 * 1024);
}

void BM_Assess(benchmark::State& state) {
    const auto img = noise_image(1024, 1024);
    const quality::PixelRegion region({img.pixels().begin(), img.pixels().end()});
    for (auto _ : state) benchmark::DoNotOptimize(quality::assess(region, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * 1024 * 1024);
}

void BM_ScleraMask(benchmark::State& state) {
    synth::FaceParams params;
    params.width = 1024;
    params.height = 1152;
    const auto face = synth::make_face(params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(regions::sclera_mask_from_landmarks(face.eyes, 1024, 1152, exec_of(state)));
    }
}

void BM_CompressDynamicRange(benchmark::State& state) {
    const auto img = noise_image(1024, 1024);
    for (auto _ : state) benchmark::DoNotOptimize(augment::compress_dynamic_range(img, 0.4, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * 1024 * 1024);
}

void BM_ScaleExposure(benchmark::State& state) {
    const auto img = noise_image(1024, 1024);
    for (auto _ : state) benchmark::DoNotOptimize(augment::scale_exposure(img, 1.7, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * 1024 * 1024);
}

void BM_EdcCurve(benchmark::State& state) {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<edc::MatedPair> pairs(200000);
    for (auto& p : pairs) {
        p.similarity = u(rng);
        p.pair_quality = std::round(50.0 * (p.similarity + u(rng)));
    }
    const auto grid = edc::discard_grid(0.01);
    for (auto _ : state) benchmark::DoNotOptimize(edc::edc_curve(pairs, 0.05, grid, 10, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_LuminanceCounts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Assess)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScleraMask)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompressDynamicRange)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScaleExposure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdcCurve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
