#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace kwsmote {

struct ConfusionMatrix {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;
    std::uint64_t fn = 0;

    std::uint64_t total() const noexcept { return tp + fp + tn + fn; }
};

/// Standard binary counts with `positive` as the positive class (the
/// minority class in all benchmarks here).
ConfusionMatrix confusion(std::span<const std::string> y_true,
                          std::span<const std::string> y_pred,
                          const std::string& positive);

/// 2PR / (P + R). Any 0/0 in the chain yields 0.
double f1_score(const ConfusionMatrix& cm);

/// sqrt(TPR * TNR). Any 0/0 yields 0.
double g_mean(const ConfusionMatrix& cm);

/// Area under the ROC curve as the tie-aware rank statistic: the fraction of
/// (positive, negative) pairs where the positive outscores the negative, with
/// half credit for ties. Computed with midranks in O(n log n); equals
/// trapezoidal integration of the ROC curve with equal-score groups
/// collapsed. Requires at least one positive and one negative.
double roc_auc(std::span<const std::string> y_true, std::span<const double> scores,
               const std::string& positive);

/// One evaluated (dataset, method, classifier, seed) cell.
struct EvalReport {
    std::string dataset;
    std::string method;
    std::string classifier;
    std::uint64_t seed = 0;
    double f1 = 0.0;
    double g_mean = 0.0;
    double auc = 0.0;
    ConfusionMatrix confusion;
};

} // namespace kwsmote
