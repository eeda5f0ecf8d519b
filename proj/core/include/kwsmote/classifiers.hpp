#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kwsmote/dataset.hpp"
#include "kwsmote/matrix.hpp"
#include "kwsmote/rng.hpp"

namespace kwsmote {

/// Predicted labels plus positive-class scores, index-aligned with the test
/// rows.
struct Scored {
    std::vector<std::string> predictions;
    std::vector<double> scores;
};

/// Majority-vote k-NN. score = fraction of the k_votes nearest training rows
/// labeled `positive`; prediction = positive iff score > 0.5 (a tie at
/// exactly 0.5 predicts the other class). Distance ties break by ascending
/// training row index.
Scored knn_fit_predict(const LabeledDataset& train, const Matrix& test_features,
                       std::size_t k_votes, const std::string& positive);

struct LogisticModel {
    std::vector<double> weights;
    double bias = 0.0;
    /// Standardization captured from the training data; constant columns get
    /// scale 1 and are listed in constant_features.
    std::vector<double> feature_mean;
    std::vector<double> feature_scale;
    std::vector<std::size_t> constant_features;
    std::string positive_label;
    std::string negative_label;
};

/// Mean log-loss of the sigmoid model over rows of X with 0/1 targets y.
double logistic_log_loss(const Matrix& X, std::span<const int> y,
                         std::span<const double> weights, double bias);

/// Gradient of logistic_log_loss with respect to (weights, bias).
std::pair<std::vector<double>, double> logistic_gradient(const Matrix& X,
                                                         std::span<const int> y,
                                                         std::span<const double> weights,
                                                         double bias);

/// Full-batch gradient descent on mean log-loss over standardized features.
/// `positive` maps to target 1. Weights start at zero unless init_scale > 0,
/// in which case they start at init_scale * normal draws from rng. Throws,
/// naming the epoch, if the loss turns non-finite.
LogisticModel logistic_fit(const LabeledDataset& train, const std::string& positive,
                           std::size_t epochs, double learning_rate, Rng& rng,
                           double init_scale = 0.0);

/// score = sigmoid(w . x_standardized + b), clamped inside (0, 1);
/// prediction = positive iff score > 0.5.
Scored logistic_predict(const LogisticModel& model, const Matrix& features);

} // namespace kwsmote
