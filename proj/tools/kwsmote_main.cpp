// kwsmote command-line tool: resample, eval, benchmark.
//
// Exit codes: 0 success, 1 runtime/data error, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "kwsmote/benchmark.hpp"
#include "kwsmote/dataset.hpp"
#include "kwsmote/samplers.hpp"

namespace {

using namespace kwsmote;

struct SamplerFlags {
    std::string method = "kwsmote";
    std::size_t k = 5;
    std::size_t c = 2;
    double tau = 0.0;
    std::optional<double> sigma;
    double sigma_normal = 1.0;
    std::size_t max_attempt_factor = 100;
};

void add_sampler_flags(CLI::App* cmd, SamplerFlags& flags) {
    cmd->add_option("--method", flags.method, "Sampling method")
        ->check(CLI::IsMember({"smote", "kwsmote", "normal", "snocc", "none"}))
        ->capture_default_str();
    cmd->add_option("--k", flags.k, "Number of nearest neighbors")->capture_default_str();
    cmd->add_option("--c", flags.c, "Neighbors per convex combination (kwsmote, snocc)")
        ->capture_default_str();
    cmd->add_option("--tau", flags.tau, "Kernel weight threshold in [0,1) (kwsmote)")
        ->capture_default_str();
    cmd->add_option("--sigma", flags.sigma,
                    "Gaussian kernel width (kwsmote); heuristic when absent");
    cmd->add_option("--sigma-normal", flags.sigma_normal,
                    "Multiplier spread for the normal method")
        ->capture_default_str();
    cmd->add_option("--max-attempt-factor", flags.max_attempt_factor,
                    "Candidate draw cap, as a multiple of the requested count (kwsmote)")
        ->capture_default_str();
}

/// nullopt means "none": no resampling. Throws CLI::ValidationError on bad
/// parameter combinations so they surface as usage errors.
std::optional<SamplerConfig> config_from_flags(const SamplerFlags& flags) {
    if (flags.method == "none") {
        return std::nullopt;
    }
    SamplerConfig cfg;
    cfg.method = *method_from_name(flags.method);
    cfg.k_neighbors = flags.k;
    cfg.convex_points = flags.c;
    cfg.threshold = flags.tau;
    cfg.sigma = flags.sigma;
    cfg.sigma_normal = flags.sigma_normal;
    cfg.max_attempt_factor = flags.max_attempt_factor;
    try {
        cfg.check_valid();
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(e.what());
    }
    return cfg;
}

MethodSpec method_spec_from_flags(const SamplerFlags& flags) {
    MethodSpec spec;
    spec.name = flags.method == "none" ? "raw" : flags.method;
    spec.sampler = config_from_flags(flags);
    return spec;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error(path + ": cannot open file for writing");
    }
    file << content;
    if (!file) {
        throw std::runtime_error(path + ": write failed");
    }
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

int cmd_resample(const std::string& input, const std::string& label,
                 const SamplerFlags& flags, std::uint64_t seed, const std::string& output,
                 bool emit_synthetic_flag) {
    const std::optional<SamplerConfig> cfg = config_from_flags(flags);
    const LabeledDataset ds = load_csv(input, label);
    const ClassSummary before = class_summary(ds);

    LabeledDataset out = ds;
    std::size_t appended = 0;
    std::size_t skipped = 0;
    if (cfg) {
        Rng rng(seed);
        ResampleResult result = resample_detailed(ds, *cfg, rng);
        appended = result.batch.size();
        skipped = result.batch.skipped_count;
        out = std::move(result.dataset);
    }
    write_csv(out, output, appended, emit_synthetic_flag);

    const auto count_of = [&out](const std::string& label) {
        return std::count(out.labels.begin(), out.labels.end(), label);
    };
    std::cout << "minority '" << before.minority_label << "': " << before.minority_count
              << " -> " << count_of(before.minority_label) << "\n";
    std::cout << "majority '" << before.majority_label << "': " << before.majority_count
              << " -> " << count_of(before.majority_label) << "\n";
    std::cout << "appended: " << appended << " synthetic rows\n";
    std::cout << "skipped: " << skipped << " candidates\n";
    if (required_count(before) == 0) {
        std::cout << "note: classes already balanced; nothing to generate\n";
    }
    std::cout << "wrote: " << output << "\n";
    return 0;
}

int cmd_eval(const std::string& input, const std::string& train_path,
             const std::string& test_path, const std::string& label,
             const SamplerFlags& flags, const ClassifierSpec& classifier, std::uint64_t seed,
             double train_fraction) {
    const MethodSpec method = method_spec_from_flags(flags);

    EvalReport report;
    if (!input.empty()) {
        const LabeledDataset ds = load_csv(input, label);
        const std::string positive = class_summary(ds).minority_label;
        report = run_eval_cell(ds, stem_of(input), method, classifier, seed, train_fraction,
                               positive);
    } else {
        const LabeledDataset train = load_csv(train_path, label);
        const LabeledDataset test = load_csv(test_path, label);
        const std::string positive = class_summary(train).minority_label;
        report = run_eval_split(train, test, stem_of(train_path), method, classifier, seed,
                                positive);
    }
    std::cout << eval_report_to_json(report);
    return 0;
}

int cmd_benchmark(const std::string& plan_path, const std::string& out_json,
                  const std::string& out_csv) {
    const BenchmarkPlan plan = parse_plan(read_file(plan_path));
    const BenchmarkReport report = run_benchmark(plan);

    std::size_t failed = 0;
    for (const BenchmarkCell& cell : report.cells) {
        failed += cell.failed_seeds;
    }
    if (failed > 0) {
        std::cerr << "warning: " << failed << " seed runs failed (see report)\n";
    }

    if (out_json.empty() && out_csv.empty()) {
        std::cout << report_to_json(report);
        return 0;
    }
    if (!out_json.empty()) {
        write_file(out_json, report_to_json(report));
    }
    if (!out_csv.empty()) {
        write_file(out_csv, report_to_csv(report));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernel-weighted convex-combination oversampling for imbalanced "
                 "binary datasets, with baseline samplers, lightweight classifiers "
                 "and a benchmark harness"};
    app.require_subcommand(1);

    // resample
    auto* resample_cmd =
        app.add_subcommand("resample", "Balance a CSV dataset by generating synthetic "
                                       "minority rows");
    std::string rs_input;
    std::string rs_label;
    std::string rs_output;
    std::uint64_t rs_seed = 0;
    bool rs_emit_flag = false;
    SamplerFlags rs_flags;
    resample_cmd->add_option("--input", rs_input, "Input CSV")->required();
    resample_cmd->add_option("--label", rs_label, "Label column name or zero-based index")
        ->required();
    resample_cmd->add_option("--output", rs_output, "Output CSV")->required();
    resample_cmd->add_option("--seed", rs_seed, "Generator seed")->capture_default_str();
    resample_cmd->add_flag("--emit-synthetic-flag", rs_emit_flag,
                           "Append a 0/1 'synthetic' column");
    add_sampler_flags(resample_cmd, rs_flags);

    // eval
    auto* eval_cmd = app.add_subcommand(
        "eval", "Train a classifier on an (optionally resampled) training split and "
                "report F1, G-mean and AUC on the test split as JSON");
    std::string ev_input;
    std::string ev_train;
    std::string ev_test;
    std::string ev_label;
    std::uint64_t ev_seed = 0;
    double ev_fraction = 0.7;
    SamplerFlags ev_flags;
    ClassifierSpec ev_classifier;
    eval_cmd->add_option("--input", ev_input,
                         "Single CSV, split with --train-fraction and --seed");
    eval_cmd->add_option("--train", ev_train, "Training CSV (with --test)");
    eval_cmd->add_option("--test", ev_test, "Test CSV (with --train)");
    eval_cmd->add_option("--label", ev_label, "Label column name or zero-based index")
        ->required();
    eval_cmd->add_option("--seed", ev_seed, "Seed for split, sampler and classifier")
        ->capture_default_str();
    eval_cmd->add_option("--train-fraction", ev_fraction, "Training fraction in (0,1)")
        ->capture_default_str();
    eval_cmd->add_option("--classifier", ev_classifier.name, "Classifier")
        ->check(CLI::IsMember({"knn", "logistic"}))
        ->capture_default_str();
    eval_cmd->add_option("--k-votes", ev_classifier.k_votes, "k-NN classifier votes")
        ->capture_default_str();
    eval_cmd->add_option("--epochs", ev_classifier.epochs, "Logistic training epochs")
        ->capture_default_str();
    eval_cmd->add_option("--learning-rate", ev_classifier.learning_rate,
                         "Logistic learning rate")
        ->capture_default_str();
    add_sampler_flags(eval_cmd, ev_flags);

    // benchmark
    auto* bench_cmd = app.add_subcommand(
        "benchmark", "Run a (dataset x method x classifier x seed) grid from a JSON plan");
    std::string bm_plan;
    std::string bm_out_json;
    std::string bm_out_csv;
    bench_cmd->add_option("--plan", bm_plan, "Plan JSON file")->required();
    bench_cmd->add_option("--out-json", bm_out_json,
                          "Report JSON path (stdout when no output is given)");
    bench_cmd->add_option("--out-csv", bm_out_csv, "Report CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return 2;
    }

    try {
        if (resample_cmd->parsed()) {
            return cmd_resample(rs_input, rs_label, rs_flags, rs_seed, rs_output,
                                rs_emit_flag);
        }
        if (eval_cmd->parsed()) {
            if (ev_input.empty() == (ev_train.empty() && ev_test.empty())) {
                std::cerr << "eval: give either --input or both --train and --test\n";
                return 2;
            }
            if (ev_input.empty() && (ev_train.empty() || ev_test.empty())) {
                std::cerr << "eval: --train and --test must be given together\n";
                return 2;
            }
            return cmd_eval(ev_input, ev_train, ev_test, ev_label, ev_flags, ev_classifier,
                            ev_seed, ev_fraction);
        }
        if (bench_cmd->parsed()) {
            return cmd_benchmark(bm_plan, bm_out_json, bm_out_csv);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
