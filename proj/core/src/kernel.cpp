#include "kwsmote/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kwsmote {

Bandwidth user_bandwidth(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("bandwidth: sigma must be positive and finite");
    }
    return {sigma, BandwidthSource::user_supplied};
}

double gaussian_weight(double squared_distance, double sigma) {
    return std::exp(-squared_distance / (2.0 * sigma * sigma));
}

double gaussian_kernel(std::span<const double> a, std::span<const double> b,
                       const Bandwidth& bw) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("gaussian_kernel: length mismatch");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return gaussian_weight(sq, bw.sigma);
}

Bandwidth default_bandwidth(const Matrix& minority) {
    if (minority.rows() < 2) {
        throw std::invalid_argument("default_bandwidth: need at least 2 rows");
    }
    // Population variance of all entries flattened into one sequence.
    const std::vector<double>& entries = minority.data();
    double mean = 0.0;
    for (double v : entries) {
        mean += v;
    }
    mean /= static_cast<double>(entries.size());
    double var = 0.0;
    for (double v : entries) {
        const double d = v - mean;
        var += d * d;
    }
    var /= static_cast<double>(entries.size());

    if (var <= 0.0) {
        throw std::runtime_error(
            "default_bandwidth: all minority entries are identical (zero variance); "
            "supply sigma explicitly");
    }
    const double sigma = std::sqrt(var * static_cast<double>(minority.cols()) / 2.0);
    return {sigma, BandwidthSource::heuristic};
}

} // namespace kwsmote
