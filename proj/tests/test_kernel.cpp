#include "doctest.h"

#include <cmath>

#include "kwsmote/kernel.hpp"
#include "test_util.hpp"

using namespace kwsmote;
using namespace kwsmote::test;

TEST_SUITE("kernel") {

TEST_CASE("identical points have weight exactly 1") {
    const std::vector<double> a{0.3, -1.7, 2.2};
    CHECK(gaussian_kernel(a, a, user_bandwidth(0.8)) == 1.0);
}

TEST_CASE("squared distance 2*sigma^2 gives e^-1") {
    // 1-D points at distance 2 with sigma^2 = 2: exponent is exactly -1.
    const std::vector<double> a{0.0};
    const std::vector<double> b{2.0};
    const double k = gaussian_kernel(a, b, user_bandwidth(std::sqrt(2.0)));
    CHECK(k == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(k == doctest::Approx(0.36787944117144233).epsilon(1e-14));
}

TEST_CASE("far points decay toward zero") {
    // ||a-b||^2 = 60 sigma^2.
    const double sigma = 0.5;
    const std::vector<double> a{0.0};
    const std::vector<double> b{std::sqrt(60.0) * sigma};
    const double got = gaussian_kernel(a, b, user_bandwidth(sigma));
    CHECK(got < 1e-12);

    const long double exponent =
        -static_cast<long double>(b[0]) * b[0] / (2.0L * sigma * sigma);
    const double want = static_cast<double>(std::exp(exponent));
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("kernel is symmetric") {
    Rng rng(31);
    const Bandwidth bw = user_bandwidth(1.3);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m = random_matrix(2, 6, rng, -5.0, 5.0);
        const double kab = gaussian_kernel(m.row(0), m.row(1), bw);
        const double kba = gaussian_kernel(m.row(1), m.row(0), bw);
        CHECK(kab == doctest::Approx(kba).epsilon(1e-15));
    }
}

TEST_CASE("weight decreases strictly with distance") {
    const Bandwidth bw = user_bandwidth(2.0);
    const std::vector<double> origin{0.0, 0.0};
    double previous = 2.0;
    for (double d = 0.0; d <= 10.0; d += 0.5) {
        const std::vector<double> p{d, 0.0};
        const double k = gaussian_kernel(origin, p, bw);
        CHECK(k < previous);
        CHECK(k > 0.0);
        CHECK(k <= 1.0);
        previous = k;
    }
}

TEST_CASE("kernel rejects mismatched lengths") {
    const std::vector<double> a{1.0, 2.0};
    const std::vector<double> b{1.0};
    CHECK_THROWS_AS(gaussian_kernel(a, b, user_bandwidth(1.0)), std::invalid_argument);
}

TEST_CASE("default_bandwidth on a two-row column") {
    const Matrix m = make_matrix({{0.0}, {2.0}});
    const Bandwidth bw = default_bandwidth(m);
    // Flattened entries {0, 2}: population variance 1, one feature.
    CHECK(bw.sigma == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(bw.source == BandwidthSource::heuristic);
}

TEST_CASE("default_bandwidth errors") {
    CHECK_THROWS_AS(default_bandwidth(make_matrix({{1.0, 2.0}})), std::invalid_argument);

    const Matrix constant(4, 3, 2.5);
    CHECK_THROWS_WITH_AS(default_bandwidth(constant), doctest::Contains("zero variance"),
                         std::runtime_error);
}

TEST_CASE("default_bandwidth scales linearly with the data") {
    Rng rng(32);
    const Matrix m = random_matrix(12, 5, rng, -3.0, 7.0);
    const double base = default_bandwidth(m).sigma;
    for (const double s : {3.7, -2.25, 0.001}) {
        Matrix scaled = m;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                scaled(r, c) = m(r, c) * s;
            }
        }
        CHECK(default_bandwidth(scaled).sigma ==
              doctest::Approx(std::abs(s) * base).epsilon(1e-12));
    }
}

TEST_CASE("user_bandwidth validates sigma") {
    CHECK(user_bandwidth(0.4).source == BandwidthSource::user_supplied);
    CHECK_THROWS_AS(user_bandwidth(0.0), std::invalid_argument);
    CHECK_THROWS_AS(user_bandwidth(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(user_bandwidth(std::nan("")), std::invalid_argument);
}

} // TEST_SUITE
