#include "kwsmote/benchmark.hpp"

#include <filesystem>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "text.hpp"

namespace kwsmote {

namespace {

using nlohmann::ordered_json;
using detail::format_double;

SamplerConfig sampler_from_json(const std::string& name, const ordered_json& entry) {
    const std::optional<SamplerMethod> method = method_from_name(name);
    if (!method) {
        throw std::runtime_error("plan: unknown method '" + name + "'");
    }
    SamplerConfig cfg;
    cfg.method = *method;
    if (entry.contains("k")) {
        cfg.k_neighbors = entry.at("k").get<std::size_t>();
    }
    if (entry.contains("c")) {
        cfg.convex_points = entry.at("c").get<std::size_t>();
    }
    if (entry.contains("tau")) {
        cfg.threshold = entry.at("tau").get<double>();
    }
    if (entry.contains("sigma")) {
        cfg.sigma = entry.at("sigma").get<double>();
    }
    if (entry.contains("sigma_normal")) {
        cfg.sigma_normal = entry.at("sigma_normal").get<double>();
    }
    if (entry.contains("max_attempt_factor")) {
        cfg.max_attempt_factor = entry.at("max_attempt_factor").get<std::size_t>();
    }
    cfg.check_valid();
    return cfg;
}

BenchmarkPlan plan_from_doc(const ordered_json& doc) {
    BenchmarkPlan plan;
    if (doc.contains("train_fraction")) {
        plan.train_fraction = doc.at("train_fraction").get<double>();
    }
    if (!(plan.train_fraction > 0.0 && plan.train_fraction < 1.0)) {
        throw std::runtime_error("plan: train_fraction must be in (0, 1)");
    }

    for (const auto& entry : doc.value("datasets", ordered_json::array())) {
        DatasetSpec spec;
        spec.path = entry.at("path").get<std::string>();
        spec.label_column = entry.at("label").get<std::string>();
        spec.id = entry.value("id", std::filesystem::path(spec.path).stem().string());
        if (entry.contains("positive")) {
            spec.positive = entry.at("positive").get<std::string>();
        }
        plan.datasets.push_back(std::move(spec));
    }
    for (const auto& entry : doc.value("methods", ordered_json::array())) {
        MethodSpec spec;
        spec.name = entry.at("name").get<std::string>();
        if (spec.name != "raw" && spec.name != "none") {
            spec.sampler = sampler_from_json(spec.name, entry);
        }
        plan.methods.push_back(std::move(spec));
    }
    for (const auto& entry : doc.value("classifiers", ordered_json::array())) {
        ClassifierSpec spec;
        spec.name = entry.at("name").get<std::string>();
        if (spec.name != "knn" && spec.name != "logistic") {
            throw std::runtime_error("plan: unknown classifier '" + spec.name + "'");
        }
        spec.k_votes = entry.value("k_votes", spec.k_votes);
        spec.epochs = entry.value("epochs", spec.epochs);
        spec.learning_rate = entry.value("learning_rate", spec.learning_rate);
        plan.classifiers.push_back(std::move(spec));
    }
    for (const auto& entry : doc.value("seeds", ordered_json::array())) {
        plan.seeds.push_back(entry.get<std::uint64_t>());
    }

    if (plan.datasets.empty() || plan.methods.empty() || plan.classifiers.empty() ||
        plan.seeds.empty()) {
        throw std::runtime_error("plan: datasets, methods, classifiers and seeds must all "
                                 "be nonempty");
    }
    if (std::set<std::uint64_t>(plan.seeds.begin(), plan.seeds.end()).size() !=
        plan.seeds.size()) {
        throw std::runtime_error("plan: seeds must be distinct");
    }
    return plan;
}

} // namespace

BenchmarkPlan parse_plan(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const ordered_json::parse_error& e) {
        throw std::runtime_error(std::string("plan: invalid JSON: ") + e.what());
    }
    try {
        return plan_from_doc(doc);
    } catch (const ordered_json::exception& e) {
        // Missing or mistyped keys surface with the nlohmann diagnostics.
        throw std::runtime_error(std::string("plan: ") + e.what());
    }
}

EvalReport run_eval_split(const LabeledDataset& train, const LabeledDataset& test,
                          const std::string& dataset_id, const MethodSpec& method,
                          const ClassifierSpec& classifier, std::uint64_t seed,
                          const std::string& positive) {
    LabeledDataset fitted_train = train;
    if (method.sampler) {
        Rng sampler_rng(derive_seed(seed, 1));
        fitted_train = resample(train, *method.sampler, sampler_rng);
    }

    Scored scored;
    if (classifier.name == "knn") {
        scored = knn_fit_predict(fitted_train, test.features, classifier.k_votes, positive);
    } else if (classifier.name == "logistic") {
        Rng clf_rng(derive_seed(seed, 2));
        const LogisticModel model = logistic_fit(fitted_train, positive, classifier.epochs,
                                                 classifier.learning_rate, clf_rng);
        scored = logistic_predict(model, test.features);
    } else {
        throw std::invalid_argument("unknown classifier '" + classifier.name + "'");
    }

    EvalReport report;
    report.dataset = dataset_id;
    report.method = method.name;
    report.classifier = classifier.name;
    report.seed = seed;
    report.confusion = confusion(test.labels, scored.predictions, positive);
    report.f1 = f1_score(report.confusion);
    report.g_mean = g_mean(report.confusion);
    report.auc = roc_auc(test.labels, scored.scores, positive);
    return report;
}

EvalReport run_eval_cell(const LabeledDataset& ds, const std::string& dataset_id,
                         const MethodSpec& method, const ClassifierSpec& classifier,
                         std::uint64_t seed, double train_fraction,
                         const std::string& positive) {
    const auto [train, test] = stratified_split(ds, {train_fraction, seed});
    return run_eval_split(train, test, dataset_id, method, classifier, seed, positive);
}

BenchmarkReport run_benchmark(const BenchmarkPlan& plan) {
    BenchmarkReport report;
    report.train_fraction = plan.train_fraction;

    for (const DatasetSpec& dspec : plan.datasets) {
        LabeledDataset ds;
        std::string load_error;
        std::string positive;
        try {
            ds = load_csv(dspec.path, dspec.label_column);
            const ClassSummary summary = class_summary(ds);
            positive = dspec.positive.value_or(summary.minority_label);
            if (positive != summary.minority_label && positive != summary.majority_label) {
                throw std::runtime_error(dspec.id + ": positive label '" + positive +
                                         "' does not occur in the data");
            }
        } catch (const std::exception& e) {
            load_error = e.what();
        }

        for (const MethodSpec& method : plan.methods) {
            for (const ClassifierSpec& classifier : plan.classifiers) {
                BenchmarkCell cell;
                cell.dataset = dspec.id;
                cell.method = method.name;
                cell.classifier = classifier.name;

                double f1_sum = 0.0;
                double gm_sum = 0.0;
                double auc_sum = 0.0;
                for (std::uint64_t seed : plan.seeds) {
                    SeedResult result;
                    result.seed = seed;
                    if (!load_error.empty()) {
                        result.error = load_error;
                    } else {
                        try {
                            result.report = run_eval_cell(ds, dspec.id, method, classifier,
                                                          seed, plan.train_fraction, positive);
                            f1_sum += result.report->f1;
                            gm_sum += result.report->g_mean;
                            auc_sum += result.report->auc;
                        } catch (const std::exception& e) {
                            result.error = e.what();
                        }
                    }
                    if (!result.report) {
                        ++cell.failed_seeds;
                    }
                    cell.seeds.push_back(std::move(result));
                }
                const std::size_t ok = cell.seeds.size() - cell.failed_seeds;
                if (ok > 0) {
                    cell.f1_mean = f1_sum / static_cast<double>(ok);
                    cell.g_mean_mean = gm_sum / static_cast<double>(ok);
                    cell.auc_mean = auc_sum / static_cast<double>(ok);
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

namespace {

ordered_json confusion_to_json(const ConfusionMatrix& cm) {
    return {{"tp", cm.tp}, {"fp", cm.fp}, {"tn", cm.tn}, {"fn", cm.fn}};
}

} // namespace

std::string eval_report_to_json(const EvalReport& report) {
    ordered_json doc;
    doc["dataset"] = report.dataset;
    doc["method"] = report.method;
    doc["classifier"] = report.classifier;
    doc["seed"] = report.seed;
    doc["f1"] = report.f1;
    doc["g_mean"] = report.g_mean;
    doc["auc"] = report.auc;
    doc["confusion"] = confusion_to_json(report.confusion);
    return doc.dump(2) + "\n";
}

std::string report_to_json(const BenchmarkReport& report) {
    ordered_json cells = ordered_json::array();
    for (const BenchmarkCell& cell : report.cells) {
        ordered_json entry;
        entry["dataset"] = cell.dataset;
        entry["method"] = cell.method;
        entry["classifier"] = cell.classifier;
        if (cell.failed_seeds < cell.seeds.size()) {
            entry["seed_mean"] = {{"f1", cell.f1_mean},
                                  {"g_mean", cell.g_mean_mean},
                                  {"auc", cell.auc_mean}};
        } else {
            entry["seed_mean"] = nullptr;
        }
        entry["failed_seeds"] = cell.failed_seeds;
        ordered_json seeds = ordered_json::array();
        for (const SeedResult& result : cell.seeds) {
            ordered_json seed_entry;
            seed_entry["seed"] = result.seed;
            if (result.report) {
                seed_entry["f1"] = result.report->f1;
                seed_entry["g_mean"] = result.report->g_mean;
                seed_entry["auc"] = result.report->auc;
                seed_entry["confusion"] = confusion_to_json(result.report->confusion);
            } else {
                seed_entry["error"] = result.error;
            }
            seeds.push_back(std::move(seed_entry));
        }
        entry["seeds"] = std::move(seeds);
        cells.push_back(std::move(entry));
    }

    ordered_json doc;
    doc["train_fraction"] = report.train_fraction;
    doc["cells"] = std::move(cells);
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const BenchmarkReport& report) {
    std::string out = "dataset,method,classifier,f1,g_mean,auc,seeds_ok,seeds_failed\n";
    for (const BenchmarkCell& cell : report.cells) {
        const std::size_t ok = cell.seeds.size() - cell.failed_seeds;
        out += cell.dataset + ',' + cell.method + ',' + cell.classifier + ',';
        if (ok > 0) {
            out += format_double(cell.f1_mean) + ',' + format_double(cell.g_mean_mean) + ',' +
                   format_double(cell.auc_mean);
        } else {
            out += ",,";
        }
        out += ',' + std::to_string(ok) + ',' + std::to_string(cell.failed_seeds) + '\n';
    }
    return out;
}

} // namespace kwsmote
