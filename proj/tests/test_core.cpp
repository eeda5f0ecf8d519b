#include "doctest.h"

#include "kwsmote/matrix.hpp"
#include "kwsmote/rng.hpp"

using namespace kwsmote;

TEST_SUITE("core") {

TEST_CASE("matrix append adopts width and rejects mismatches") {
    Matrix m;
    m.append_row(std::vector<double>{1.0, 2.0});
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 2);
    CHECK_THROWS_AS(m.append_row(std::vector<double>{1.0, 2.0, 3.0}), std::invalid_argument);

    Matrix fixed(0, 3);
    CHECK_THROWS_AS(fixed.append_row(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("rng uniform stays in [0,1) and repeats under the same seed") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(u == b.uniform());
    }
}

TEST_CASE("rng uniform_index covers the full range") {
    Rng rng(7);
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 5000; ++i) {
        const std::size_t v = rng.uniform_index(5);
        REQUIRE(v < 5);
        ++hits[v];
    }
    for (int h : hits) {
        CHECK(h > 800); // 1000 expected per bucket
    }
    CHECK_THROWS_AS(rng.uniform_index(0), std::invalid_argument);
}

TEST_CASE("rng normal has roughly standard moments") {
    Rng rng(123);
    const int n = 100000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sq += x * x;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("derive_seed separates streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}

} // TEST_SUITE
