#include <benchmark/benchmark.h>

#include "kwsmote/classifiers.hpp"
#include "kwsmote/dataset.hpp"
#include "kwsmote/metrics.hpp"

using namespace kwsmote;

namespace {

LabeledDataset blobs(std::size_t n_neg, std::size_t n_pos, std::size_t dims,
                     std::uint64_t seed) {
    Rng rng(seed);
    LabeledDataset ds;
    ds.features = Matrix(0, dims);
    std::vector<double> row(dims);
    for (std::size_t i = 0; i < n_neg + n_pos; ++i) {
        const bool pos = i >= n_neg;
        for (double& v : row) {
            v = (pos ? 2.0 : 0.0) + rng.normal();
        }
        ds.features.append_row(row);
        ds.labels.push_back(pos ? "1" : "0");
    }
    return ds;
}

} // namespace

static void BM_StratifiedSplit(benchmark::State& state) {
    const LabeledDataset ds = blobs(500, 268, 8, 11); // Diabetes-sized
    for (auto _ : state) {
        benchmark::DoNotOptimize(stratified_split(ds, {0.7, 42}));
    }
}
BENCHMARK(BM_StratifiedSplit);

static void BM_RocAuc(benchmark::State& state) {
    Rng rng(12);
    const std::size_t n = state.range(0);
    std::vector<std::string> labels;
    std::vector<double> scores;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(i % 4 == 0 ? "1" : "0");
        scores.push_back(rng.uniform());
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(roc_auc(labels, scores, "1"));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_RocAuc)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_LogisticFit(benchmark::State& state) {
    const LabeledDataset train = blobs(350, 188, 8, 13);
    for (auto _ : state) {
        Rng rng(1);
        benchmark::DoNotOptimize(logistic_fit(train, "1", state.range(0), 0.1, rng));
    }
}
BENCHMARK(BM_LogisticFit)->Arg(50)->Arg(300);

static void BM_KnnClassify(benchmark::State& state) {
    const LabeledDataset train = blobs(350, 188, 8, 14);
    const LabeledDataset test = blobs(150, 80, 8, 15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(knn_fit_predict(train, test.features, 5, "1"));
    }
    state.SetItemsProcessed(state.iterations() * test.n_samples());
}
BENCHMARK(BM_KnnClassify);
