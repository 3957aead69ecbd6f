#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "sptrec/arith.hpp"
#include "sptrec/series.hpp"

using namespace sptrec;

namespace {

TruncatedSeries make(const std::vector<long>& values) {
    std::vector<Int> coeffs(values.begin(), values.end());
    return TruncatedSeries(std::move(coeffs), static_cast<int>(values.size()) - 1);
}

TruncatedSeries random_series(std::mt19937& rng, int precision) {
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<Int> coeffs(static_cast<std::size_t>(precision) + 1);
    for (Int& c : coeffs) c = dist(rng);
    return TruncatedSeries(std::move(coeffs), precision);
}

// prod_{n=1..precision} (1 - q^n), assembled factor by factor
TruncatedSeries euler_product_direct(int precision) {
    TruncatedSeries acc = TruncatedSeries::one(precision);
    for (int n = 1; n <= precision; ++n) {
        std::vector<Int> factor(static_cast<std::size_t>(precision) + 1);
        factor[0] = 1;
        factor[static_cast<std::size_t>(n)] = -1;
        acc = mul(acc, TruncatedSeries(std::move(factor), precision));
    }
    return acc;
}

} // namespace

TEST_CASE("constructor stores coefficients and validates length") {
    const TruncatedSeries one = make({1, 0, 0});
    CHECK(one == TruncatedSeries::one(2));
    CHECK(make({0, 1}).coeff(1) == 1);
    CHECK(make({1, 2, 4}).coeff(2) == 4);
    CHECK(one.precision() == 2);
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Int>{1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(make({1, 2, 3}).coeff(3), std::out_of_range);
    CHECK_THROWS_AS(make({1, 2, 3}).coeff(-1), std::out_of_range);
}

TEST_CASE("zero and one factories") {
    CHECK(TruncatedSeries::zero(4) == make({0, 0, 0, 0, 0}));
    CHECK(TruncatedSeries::one(3) == make({1, 0, 0, 0}));
}

TEST_CASE("mul matches hand expansions") {
    CHECK(mul(make({1, 1, 0}), make({1, -1, 0})) == make({1, 0, -1}));
    // truncation keeps the shorter precision
    CHECK(mul(make({1, 1}), make({1, 2, 3, 4})).precision() == 1);
    CHECK(mul(make({1, 1}), make({1, 2, 3, 4})) == make({1, 3}));
}

TEST_CASE("mul annihilates a series against its inverse's generating function") {
    // the overpartition counting series inverts the alternating-square series
    const TruncatedSeries pbar = make({1, 2, 4, 8, 14, 24, 40});
    CHECK(mul(theta_series(6), pbar) == TruncatedSeries::one(6));
}

TEST_CASE("mul is commutative and associative") {
    std::mt19937 rng(20260819);
    for (int trial = 0; trial < 25; ++trial) {
        const TruncatedSeries a = random_series(rng, 16);
        const TruncatedSeries b = random_series(rng, 16);
        const TruncatedSeries c = random_series(rng, 16);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("invert reproduces the counting series of the three products") {
    const TruncatedSeries pbar = invert(theta_series(6));
    CHECK(pbar == make({1, 2, 4, 8, 14, 24, 40}));

    const TruncatedSeries alternating_m2 = invert(triangular_series(6));
    CHECK(alternating_m2 == make({1, -1, 1, -2, 3, -4, 5}));

    const TruncatedSeries p = invert(euler_product_series(10));
    CHECK(p == make({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
}

TEST_CASE("invert is a two-sided inverse at scale") {
    for (const TruncatedSeries& s : {euler_product_series(500), theta_series(500),
                                     triangular_series(500)}) {
        CHECK(mul(s, invert(s)) == TruncatedSeries::one(500));
        CHECK(mul(invert(s), s) == TruncatedSeries::one(500));
    }
    CHECK(invert(invert(euler_product_series(200))) == euler_product_series(200));
}

TEST_CASE("invert handles constant term -1 and rejects non-units") {
    const TruncatedSeries s = make({-1, 3, -2, 5});
    CHECK(mul(s, invert(s)) == TruncatedSeries::one(3));
    CHECK_THROWS_AS(invert(make({2, 1})), std::domain_error);
    CHECK_THROWS_AS(invert(make({0, 1})), std::domain_error);
}

TEST_CASE("euler product expands on generalized pentagonal support") {
    CHECK(euler_product_series(12) == make({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    CHECK(euler_product_series(200) == euler_product_direct(200));
}

TEST_CASE("theta series carries 2(-1)^n at the squares") {
    const TruncatedSeries theta = theta_series(30);
    for (int n = 0; n <= 30; ++n) {
        long expected = 0;
        if (n == 0) expected = 1;
        for (int k = 1; k * k <= n; ++k)
            if (k * k == n) expected = (k % 2 == 0) ? 2 : -2;
        CHECK(theta.coeff(n) == expected);
    }
}

TEST_CASE("theta squared counts signed lattice points on circles") {
    const int bound = 100;
    const TruncatedSeries theta2 = mul(theta_series(bound), theta_series(bound));
    for (int n = 0; n <= bound; ++n) {
        long count = 0;
        for (int a = -10; a <= 10; ++a)
            for (int b = -10; b <= 10; ++b)
                if (a * a + b * b == n) count += ((a + b) % 2 == 0) ? 1 : -1;
        CHECK(theta2.coeff(n) == count);
    }
}

TEST_CASE("triangular series marks the triangular numbers") {
    const TruncatedSeries tri = triangular_series(21);
    for (int n = 0; n <= 21; ++n) {
        bool triangular = false;
        for (int k = 0; k * (k + 1) / 2 <= n; ++k)
            if (k * (k + 1) / 2 == n) triangular = true;
        CHECK(tri.coeff(n) == (triangular ? 1 : 0));
    }
}

TEST_CASE("weight-2 Eisenstein expansion") {
    const TruncatedSeries e2 = e2_series(500);
    CHECK(e2.coeff(0) == 1);
    CHECK(e2.coeff(1) == -24);
    CHECK(e2.coeff(2) == -72);
    CHECK(e2.coeff(3) == -96);
    CHECK(e2.coeff(4) == -168);
    for (int n = 1; n <= 500; ++n) CHECK(e2.coeff(n) == -24 * sigma(n));
}
