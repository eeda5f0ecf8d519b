#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kwsmote/matrix.hpp"

namespace kwsmote {

/// Exact k-nearest-neighbor result for one query row. Indices are sorted by
/// ascending distance; ties broken by ascending row index. The query row
/// itself is excluded.
struct NeighborList {
    std::size_t query_index = 0;
    std::vector<std::size_t> indices;
    std::vector<double> distances;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Brute-force exact search over the rows of `points`, excluding the query
/// row. Requires 1 <= k <= rows - 1.
NeighborList k_nearest(const Matrix& points, std::size_t query_index, std::size_t k);

/// k_nearest for every row. The table is what the samplers consume.
std::vector<NeighborList> knn_table(const Matrix& points, std::size_t k);

/// Nearest rows to an external query vector (no self-exclusion; query_index
/// is set to points.rows()). Requires 1 <= k <= rows.
NeighborList k_nearest_to(const Matrix& points, std::span<const double> query, std::size_t k);

} // namespace kwsmote
