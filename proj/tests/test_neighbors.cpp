#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "kwsmote/neighbors.hpp"
#include "test_util.hpp"

using namespace kwsmote;
using namespace kwsmote::test;

namespace {

/// Independent distance oracle: summation in extended precision.
double distance_oracle(std::span<const double> a, std::span<const double> b) {
    long double sum = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long double d = static_cast<long double>(a[i]) - static_cast<long double>(b[i]);
        sum += d * d;
    }
    return static_cast<double>(std::sqrt(sum));
}

/// Full-sort oracle: all distances to the query (self excluded), sorted by
/// (distance, index).
std::vector<std::pair<double, std::size_t>> sorted_distances(const Matrix& points,
                                                             std::size_t query) {
    std::vector<std::pair<double, std::size_t>> all;
    for (std::size_t r = 0; r < points.rows(); ++r) {
        if (r != query) {
            all.emplace_back(euclidean_distance(points.row(query), points.row(r)), r);
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

TEST_SUITE("neighbors") {

TEST_CASE("euclidean_distance basics") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    CHECK(euclidean_distance(a, a) == 0.0);

    const std::vector<double> origin{0.0, 0.0};
    const std::vector<double> p{3.0, 4.0};
    CHECK(euclidean_distance(origin, p) == 5.0);

    CHECK_THROWS_AS(euclidean_distance(a, origin), std::invalid_argument);
}

TEST_CASE("euclidean_distance matches the extended-precision oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = random_matrix(2, 8, rng, -100.0, 100.0);
        const double got = euclidean_distance(m.row(0), m.row(1));
        const double want = distance_oracle(m.row(0), m.row(1));
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("k_nearest on forced geometry") {
    const Matrix points = make_matrix({{0.0}, {1.0}, {10.0}});
    const NeighborList nn = k_nearest(points, 0, 1);
    CHECK(nn.indices == std::vector<std::size_t>{1});
    CHECK(nn.distances == std::vector<double>{1.0});
    CHECK(nn.query_index == 0);
}

TEST_CASE("k_nearest breaks distance ties by row index") {
    // Rows 1 and 2 are duplicates, both at distance 1 from the query.
    const Matrix points = make_matrix({{0.0}, {1.0}, {1.0}, {5.0}});
    const NeighborList nn = k_nearest(points, 0, 2);
    CHECK(nn.indices == std::vector<std::size_t>{1, 2});
}

TEST_CASE("k_nearest equals the full-sort oracle") {
    Rng rng(21);
    const Matrix points = random_matrix(50, 3, rng);
    for (std::size_t q = 0; q < points.rows(); q += 7) {
        const NeighborList nn = k_nearest(points, q, 5);
        const auto all = sorted_distances(points, q);
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(nn.indices[i] == all[i].second);
            CHECK(nn.distances[i] == all[i].first);
        }
        // Max of the k distances is the k-th order statistic.
        CHECK(nn.distances.back() == all[4].first);
        // Self excluded, distances nondecreasing.
        CHECK(std::find(nn.indices.begin(), nn.indices.end(), q) == nn.indices.end());
        CHECK(std::is_sorted(nn.distances.begin(), nn.distances.end()));
    }
}

TEST_CASE("neighbor sets are nested as k grows") {
    Rng rng(22);
    const Matrix points = random_matrix(30, 4, rng);
    for (std::size_t k = 1; k + 1 < 10; ++k) {
        const NeighborList smaller = k_nearest(points, 3, k);
        const NeighborList larger = k_nearest(points, 3, k + 1);
        const std::set<std::size_t> big(larger.indices.begin(), larger.indices.end());
        for (std::size_t idx : smaller.indices) {
            CHECK(big.count(idx) == 1);
        }
    }
}

TEST_CASE("k_nearest validates k") {
    const Matrix points = make_matrix({{0.0}, {1.0}, {2.0}});
    CHECK_THROWS_AS(k_nearest(points, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(k_nearest(points, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(k_nearest(points, 9, 1), std::invalid_argument);
}

TEST_CASE("k_nearest_to ranks external queries without self-exclusion") {
    const Matrix points = make_matrix({{0.0}, {2.0}, {3.0}});
    const std::vector<double> query{1.9};
    const NeighborList nn = k_nearest_to(points, query, 3);
    CHECK(nn.indices == std::vector<std::size_t>{1, 2, 0});
    CHECK(nn.query_index == points.rows());
    CHECK_THROWS_AS(k_nearest_to(points, query, 4), std::invalid_argument);
}

} // TEST_SUITE
