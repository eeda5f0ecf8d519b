#include <benchmark/benchmark.h>

#include "kwsmote/kernel.hpp"
#include "kwsmote/neighbors.hpp"
#include "kwsmote/samplers.hpp"

using namespace kwsmote;

namespace {

Matrix random_minority(std::size_t rows, std::size_t dims, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(rows, dims);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < dims; ++c) {
            m(r, c) = 4.0 * (rng.uniform() - 0.5);
        }
    }
    return m;
}

} // namespace

static void BM_GaussianKernel(benchmark::State& state) {
    const Matrix m = random_minority(2, state.range(0), 1);
    const Bandwidth bw = user_bandwidth(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gaussian_kernel(m.row(0), m.row(1), bw));
    }
}
BENCHMARK(BM_GaussianKernel)->Arg(4)->Arg(8)->Arg(30);

static void BM_KnnTable(benchmark::State& state) {
    const Matrix m = random_minority(state.range(0), 8, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(knn_table(m, 5));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KnnTable)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_SmoteGenerate(benchmark::State& state) {
    const Matrix m = random_minority(178, 4, 3); // Blood-Transfusion-sized minority
    for (auto _ : state) {
        Rng rng(7);
        benchmark::DoNotOptimize(smote_generate(m, 5, state.range(0), rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SmoteGenerate)->Arg(100)->Arg(392);

static void BM_KwsmoteGenerate(benchmark::State& state) {
    const Matrix m = random_minority(178, 4, 3);
    SamplerConfig cfg;
    cfg.method = SamplerMethod::kwsmote;
    cfg.k_neighbors = 5;
    cfg.convex_points = 3;
    cfg.threshold = 0.01;
    for (auto _ : state) {
        Rng rng(7);
        benchmark::DoNotOptimize(kwsmote_generate(m, cfg, state.range(0), rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KwsmoteGenerate)->Arg(100)->Arg(392);

static void BM_SnoccGenerate(benchmark::State& state) {
    const Matrix m = random_minority(178, 4, 3);
    for (auto _ : state) {
        Rng rng(7);
        benchmark::DoNotOptimize(snocc_generate(m, 5, 3, state.range(0), rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SnoccGenerate)->Arg(392);

static void BM_DefaultBandwidth(benchmark::State& state) {
    const Matrix m = random_minority(state.range(0), 8, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(default_bandwidth(m));
    }
}
BENCHMARK(BM_DefaultBandwidth)->Arg(178)->Arg(512);
