#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kwsmote/classifiers.hpp"
#include "kwsmote/dataset.hpp"
#include "kwsmote/metrics.hpp"
#include "kwsmote/samplers.hpp"

namespace kwsmote {

struct DatasetSpec {
    std::string path;
    std::string label_column;
    std::string id; // defaults to the file stem
    /// Positive class for scoring; the dataset minority when absent.
    std::optional<std::string> positive;
};

/// A sampling method entry: "raw" (no resampling) or one of the generators
/// with its SamplerConfig.
struct MethodSpec {
    std::string name = "raw";
    std::optional<SamplerConfig> sampler;
};

struct ClassifierSpec {
    std::string name = "knn"; // "knn" | "logistic"
    std::size_t k_votes = 5;
    std::size_t epochs = 300;
    double learning_rate = 0.1;
};

struct BenchmarkPlan {
    std::vector<DatasetSpec> datasets;
    std::vector<MethodSpec> methods;
    std::vector<ClassifierSpec> classifiers;
    std::vector<std::uint64_t> seeds; // distinct
    double train_fraction = 0.7;
};

/// Parses a JSON plan document (schema documented in the README) and
/// validates it: nonempty lists, distinct seeds, train_fraction in (0, 1).
BenchmarkPlan parse_plan(const std::string& json_text);

/// One (dataset, method, classifier, seed) run: stratified split with the
/// seed, resample the training partition only (raw leaves it untouched), fit,
/// then evaluate on the untouched test partition. `positive` is the
/// positive/minority label used for scoring; pass the dataset-level minority
/// so the orientation survives resampling to balance.
EvalReport run_eval_cell(const LabeledDataset& ds, const std::string& dataset_id,
                         const MethodSpec& method, const ClassifierSpec& classifier,
                         std::uint64_t seed, double train_fraction,
                         const std::string& positive);

/// Same pipeline on a caller-provided split (no splitting step).
EvalReport run_eval_split(const LabeledDataset& train, const LabeledDataset& test,
                          const std::string& dataset_id, const MethodSpec& method,
                          const ClassifierSpec& classifier, std::uint64_t seed,
                          const std::string& positive);

struct SeedResult {
    std::uint64_t seed = 0;
    std::optional<EvalReport> report; // empty on failure
    std::string error;                // failure message, empty on success
};

/// One report row: a (dataset, method, classifier) combination with per-seed
/// results and the mean over succeeded seeds.
struct BenchmarkCell {
    std::string dataset;
    std::string method;
    std::string classifier;
    std::vector<SeedResult> seeds;
    std::size_t failed_seeds = 0;
    // Means over succeeded seeds; meaningless when every seed failed.
    double f1_mean = 0.0;
    double g_mean_mean = 0.0;
    double auc_mean = 0.0;
};

struct BenchmarkReport {
    double train_fraction = 0.7;
    std::vector<BenchmarkCell> cells; // plan order: dataset-major, then method, then classifier
};

/// Runs the full grid. Per-seed failures are recorded in the report without
/// aborting the run; only plan-level problems (e.g. an unreadable dataset
/// file) throw.
BenchmarkReport run_benchmark(const BenchmarkPlan& plan);

std::string eval_report_to_json(const EvalReport& report);
std::string report_to_json(const BenchmarkReport& report);
std::string report_to_csv(const BenchmarkReport& report);

} // namespace kwsmote
