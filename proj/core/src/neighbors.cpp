#include "kwsmote/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kwsmote {

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("euclidean_distance: length mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

NeighborList nearest_from_candidates(const Matrix& points, std::span<const double> query,
                                     std::size_t query_index, std::size_t k) {
    std::vector<std::pair<double, std::size_t>> candidates;
    candidates.reserve(points.rows());
    for (std::size_t r = 0; r < points.rows(); ++r) {
        if (r == query_index) {
            continue;
        }
        candidates.emplace_back(euclidean_distance(query, points.row(r)), r);
    }
    // Ascending distance, ties by ascending row index.
    std::partial_sort(candidates.begin(), candidates.begin() + k, candidates.end());

    NeighborList list;
    list.query_index = query_index;
    list.indices.reserve(k);
    list.distances.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        list.distances.push_back(candidates[i].first);
        list.indices.push_back(candidates[i].second);
    }
    return list;
}

} // namespace

NeighborList k_nearest(const Matrix& points, std::size_t query_index, std::size_t k) {
    if (query_index >= points.rows()) {
        throw std::invalid_argument("k_nearest: query index out of range");
    }
    if (k < 1 || k > points.rows() - 1) {
        throw std::invalid_argument("k_nearest: k must be in [1, " +
                                    std::to_string(points.rows() - 1) + "], got " +
                                    std::to_string(k));
    }
    return nearest_from_candidates(points, points.row(query_index), query_index, k);
}

std::vector<NeighborList> knn_table(const Matrix& points, std::size_t k) {
    std::vector<NeighborList> table;
    table.reserve(points.rows());
    for (std::size_t r = 0; r < points.rows(); ++r) {
        table.push_back(k_nearest(points, r, k));
    }
    return table;
}

NeighborList k_nearest_to(const Matrix& points, std::span<const double> query, std::size_t k) {
    if (k < 1 || k > points.rows()) {
        throw std::invalid_argument("k_nearest_to: k must be in [1, " +
                                    std::to_string(points.rows()) + "], got " +
                                    std::to_string(k));
    }
    // points.rows() is the out-of-band marker for "external query".
    return nearest_from_candidates(points, query, points.rows(), k);
}

} // namespace kwsmote
