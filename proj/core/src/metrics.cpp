#include "kwsmote/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace kwsmote {

namespace {

double safe_div(double num, double den) {
    return den == 0.0 ? 0.0 : num / den;
}

} // namespace

ConfusionMatrix confusion(std::span<const std::string> y_true,
                          std::span<const std::string> y_pred,
                          const std::string& positive) {
    if (y_true.size() != y_pred.size()) {
        throw std::invalid_argument("confusion: length mismatch");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const bool truth = y_true[i] == positive;
        const bool pred = y_pred[i] == positive;
        if (truth) {
            pred ? ++cm.tp : ++cm.fn;
        } else {
            pred ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

double f1_score(const ConfusionMatrix& cm) {
    const double precision = safe_div(static_cast<double>(cm.tp),
                                      static_cast<double>(cm.tp + cm.fp));
    const double recall = safe_div(static_cast<double>(cm.tp),
                                   static_cast<double>(cm.tp + cm.fn));
    return safe_div(2.0 * precision * recall, precision + recall);
}

double g_mean(const ConfusionMatrix& cm) {
    const double tpr = safe_div(static_cast<double>(cm.tp),
                                static_cast<double>(cm.tp + cm.fn));
    const double tnr = safe_div(static_cast<double>(cm.tn),
                                static_cast<double>(cm.tn + cm.fp));
    return std::sqrt(tpr * tnr);
}

double roc_auc(std::span<const std::string> y_true, std::span<const double> scores,
               const std::string& positive) {
    if (y_true.size() != scores.size()) {
        throw std::invalid_argument("roc_auc: length mismatch");
    }
    for (double s : scores) {
        if (!std::isfinite(s)) {
            throw std::invalid_argument("roc_auc: non-finite score");
        }
    }

    const std::size_t n = y_true.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Mann-Whitney rank sum with midranks, so tied pairs earn half credit.
    double positive_rank_sum = 0.0;
    std::size_t n_pos = 0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) {
            ++j;
        }
        const double midrank = 0.5 * static_cast<double>(i + 1 + j); // ranks i+1 .. j
        for (std::size_t t = i; t < j; ++t) {
            if (y_true[order[t]] == positive) {
                positive_rank_sum += midrank;
                ++n_pos;
            }
        }
        i = j;
    }

    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw std::invalid_argument("roc_auc: need at least one positive and one negative");
    }
    const double np = static_cast<double>(n_pos);
    return (positive_rank_sum - np * (np + 1.0) / 2.0) / (np * static_cast<double>(n_neg));
}

} // namespace kwsmote
