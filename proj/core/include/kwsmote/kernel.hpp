#pragma once

#include <span>

#include "kwsmote/matrix.hpp"

namespace kwsmote {

enum class BandwidthSource { user_supplied, heuristic };

struct Bandwidth {
    double sigma = 1.0; // > 0 and finite
    BandwidthSource source = BandwidthSource::heuristic;
};

/// Validates sigma > 0 and finite.
Bandwidth user_bandwidth(double sigma);

/// exp(-d^2 / (2 sigma^2)) for a precomputed squared distance d^2.
double gaussian_weight(double squared_distance, double sigma);

/// Gaussian kernel K(a, b) = exp(-||a-b||^2 / (2 sigma^2)), in (0, 1].
/// K(a, a) = 1 exactly.
double gaussian_kernel(std::span<const double> a, std::span<const double> b,
                       const Bandwidth& bw);

/// Default width sigma = sqrt(Var(X) * n_features / 2), where Var(X) is the
/// population variance of all entries of X flattened into one sequence.
/// Throws if the matrix has fewer than 2 rows or zero variance (in which case
/// the caller should supply sigma explicitly).
Bandwidth default_bandwidth(const Matrix& minority);

} // namespace kwsmote
