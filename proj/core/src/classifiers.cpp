#include "kwsmote/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kwsmote/neighbors.hpp"

namespace kwsmote {

namespace {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

/// log(1 + e^z) without overflow.
double softplus(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

/// Keeps scores inside the open interval (0, 1) when the sigmoid saturates.
double clamp_score(double s) {
    return std::clamp(s, 1e-300, 1.0 - 1e-16);
}

std::string other_label(const LabeledDataset& ds, const std::string& positive) {
    std::string other;
    bool positive_seen = false;
    bool other_seen = false;
    for (const auto& label : ds.labels) {
        if (label == positive) {
            positive_seen = true;
        } else {
            other = label;
            other_seen = true;
        }
    }
    if (!positive_seen || !other_seen) {
        throw std::invalid_argument("classifier: positive label '" + positive +
                                    "' must be one of the two training labels");
    }
    return other;
}

} // namespace

Scored knn_fit_predict(const LabeledDataset& train, const Matrix& test_features,
                       std::size_t k_votes, const std::string& positive) {
    train.check_valid();
    if (train.n_samples() == 0) {
        throw std::invalid_argument("knn_fit_predict: empty training set");
    }
    if (k_votes < 1 || k_votes > train.n_samples()) {
        throw std::invalid_argument("knn_fit_predict: k_votes must be in [1, " +
                                    std::to_string(train.n_samples()) + "]");
    }
    if (test_features.cols() != train.n_features()) {
        throw std::invalid_argument("knn_fit_predict: feature width mismatch");
    }
    const std::string negative = other_label(train, positive);

    Scored out;
    out.predictions.reserve(test_features.rows());
    out.scores.reserve(test_features.rows());
    for (std::size_t r = 0; r < test_features.rows(); ++r) {
        const NeighborList nn = k_nearest_to(train.features, test_features.row(r), k_votes);
        std::size_t votes = 0;
        for (std::size_t idx : nn.indices) {
            if (train.labels[idx] == positive) {
                ++votes;
            }
        }
        const double score = static_cast<double>(votes) / static_cast<double>(k_votes);
        out.scores.push_back(score);
        out.predictions.push_back(score > 0.5 ? positive : negative);
    }
    return out;
}

double logistic_log_loss(const Matrix& X, std::span<const int> y,
                         std::span<const double> weights, double bias) {
    if (X.rows() != y.size() || X.cols() != weights.size()) {
        throw std::invalid_argument("logistic_log_loss: shape mismatch");
    }
    double loss = 0.0;
    for (std::size_t r = 0; r < X.rows(); ++r) {
        const auto row = X.row(r);
        double z = bias;
        for (std::size_t c = 0; c < row.size(); ++c) {
            z += weights[c] * row[c];
        }
        // -[y log s + (1-y) log(1-s)] = softplus(z) - y z
        loss += softplus(z) - static_cast<double>(y[r]) * z;
    }
    return loss / static_cast<double>(X.rows());
}

std::pair<std::vector<double>, double> logistic_gradient(const Matrix& X,
                                                         std::span<const int> y,
                                                         std::span<const double> weights,
                                                         double bias) {
    if (X.rows() != y.size() || X.cols() != weights.size()) {
        throw std::invalid_argument("logistic_gradient: shape mismatch");
    }
    std::vector<double> grad_w(X.cols(), 0.0);
    double grad_b = 0.0;
    for (std::size_t r = 0; r < X.rows(); ++r) {
        const auto row = X.row(r);
        double z = bias;
        for (std::size_t c = 0; c < row.size(); ++c) {
            z += weights[c] * row[c];
        }
        const double residual = sigmoid(z) - static_cast<double>(y[r]);
        for (std::size_t c = 0; c < row.size(); ++c) {
            grad_w[c] += residual * row[c];
        }
        grad_b += residual;
    }
    const double inv_n = 1.0 / static_cast<double>(X.rows());
    for (double& g : grad_w) {
        g *= inv_n;
    }
    return {std::move(grad_w), grad_b * inv_n};
}

LogisticModel logistic_fit(const LabeledDataset& train, const std::string& positive,
                           std::size_t epochs, double learning_rate, Rng& rng,
                           double init_scale) {
    train.check_valid();
    const std::size_t n = train.n_samples();
    const std::size_t d = train.n_features();

    LogisticModel model;
    model.positive_label = positive;
    model.negative_label = other_label(train, positive);
    model.feature_mean.assign(d, 0.0);
    model.feature_scale.assign(d, 1.0);

    for (std::size_t c = 0; c < d; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            mean += train.features(r, c);
        }
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double dev = train.features(r, c) - mean;
            var += dev * dev;
        }
        var /= static_cast<double>(n);
        model.feature_mean[c] = mean;
        if (var > 0.0) {
            model.feature_scale[c] = std::sqrt(var);
        } else {
            model.constant_features.push_back(c);
        }
    }

    Matrix standardized(n, d);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            standardized(r, c) =
                (train.features(r, c) - model.feature_mean[c]) / model.feature_scale[c];
        }
    }
    std::vector<int> targets(n);
    for (std::size_t r = 0; r < n; ++r) {
        targets[r] = train.labels[r] == positive ? 1 : 0;
    }

    model.weights.assign(d, 0.0);
    if (init_scale > 0.0) {
        for (double& w : model.weights) {
            w = init_scale * rng.normal();
        }
        model.bias = init_scale * rng.normal();
    }

    for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
        const double loss = logistic_log_loss(standardized, targets, model.weights, model.bias);
        if (!std::isfinite(loss)) {
            throw std::runtime_error("logistic_fit: non-finite loss at epoch " +
                                     std::to_string(epoch) +
                                     " (try a smaller learning rate)");
        }
        auto [grad_w, grad_b] =
            logistic_gradient(standardized, targets, model.weights, model.bias);
        for (std::size_t c = 0; c < d; ++c) {
            model.weights[c] -= learning_rate * grad_w[c];
        }
        model.bias -= learning_rate * grad_b;
    }
    return model;
}

Scored logistic_predict(const LogisticModel& model, const Matrix& features) {
    if (features.cols() != model.weights.size()) {
        throw std::invalid_argument("logistic_predict: feature width mismatch");
    }
    Scored out;
    out.predictions.reserve(features.rows());
    out.scores.reserve(features.rows());
    for (std::size_t r = 0; r < features.rows(); ++r) {
        double z = model.bias;
        for (std::size_t c = 0; c < features.cols(); ++c) {
            const double x = (features(r, c) - model.feature_mean[c]) / model.feature_scale[c];
            z += model.weights[c] * x;
        }
        const double score = clamp_score(sigmoid(z));
        out.scores.push_back(score);
        out.predictions.push_back(score > 0.5 ? model.positive_label : model.negative_label);
    }
    return out;
}

} // namespace kwsmote
