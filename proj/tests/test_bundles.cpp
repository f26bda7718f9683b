#include "charclass/bundles.hpp"
#include "charclass/grassmannian.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace charclass;

TEST_CASE("real regime, closed manifolds: dim + q") {
    for (int m = 2; m <= 40; ++m) {
        const auto rp = lambda_top(ManifoldSpec::real_proj(m), 2, Regime::Real);
        CHECK(rp.top_degree == m + oracle::q_real_proj(m));
        CHECK(rp.exact);
        CHECK(rp.source == BundleSource::ClosedManifold);
        CHECK(lambda_top(ManifoldSpec::sphere(m), 2, Regime::Real).top_degree == m);
        CHECK(lambda_top(ManifoldSpec::complex_proj(m), 2, Regime::Real).top_degree ==
              2 * m + oracle::q_complex_proj(m));
    }
    const auto prod = ManifoldSpec::product({ManifoldSpec::sphere(2), ManifoldSpec::real_proj(3)});
    CHECK(lambda_top(prod, 2, Regime::Real).top_degree == 5);
}

TEST_CASE("real regime, the plane with 2^i points") {
    for (int i = 1; i <= 10; ++i) {
        const int k = 1 << i;
        const auto p = lambda_top(ManifoldSpec::euclid(2), k, Regime::Real);
        CHECK(p.top_degree == k - 1);
        CHECK(p.source == BundleSource::Plane);
    }
    CHECK_THROWS_AS(lambda_top(ManifoldSpec::euclid(2), 3, Regime::Real), NotDeterminedError);
    CHECK_THROWS_AS(lambda_top(ManifoldSpec::euclid(3), 2, Regime::Real), NotDeterminedError);
    CHECK_THROWS_AS(lambda_top(ManifoldSpec::sphere(3), 3, Regime::Real), NotDeterminedError);
}

TEST_CASE("complex regime") {
    for (int m = 2; m <= 20; ++m) {
        CHECK(lambda_top(ManifoldSpec::sphere(m), 2, Regime::Complex).top_degree == m / 2);
    }
    for (int m = 4; m <= 20; ++m) {
        const auto p = lambda_top(ManifoldSpec::complex_proj(m), 2, Regime::Complex);
        CHECK(p.top_degree == 2 * m - 2);
        CHECK_FALSE(p.exact);
    }
    CHECK_THROWS_AS(lambda_top(ManifoldSpec::complex_proj(3), 2, Regime::Complex), NotDeterminedError);
    const auto r = lambda_top(ManifoldSpec::euclid(3), 3, Regime::Complex);
    CHECK(r.top_degree == 2);
    CHECK(r.source == BundleSource::EuclidPrimeLower);
    CHECK(lambda_top(ManifoldSpec::euclid(6), 5, Regime::Complex).top_degree == 8);
    CHECK_THROWS_AS(lambda_top(ManifoldSpec::euclid(3), 2, Regime::Complex), NotDeterminedError);
    CHECK_THROWS_AS(lambda_top(ManifoldSpec::euclid(3), 9, Regime::Complex), NotDeterminedError);
    CHECK_THROWS_AS(lambda_top(ManifoldSpec::real_proj(3), 2, Regime::Complex), NotDeterminedError);
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(lambda_top(ManifoldSpec::sphere(3), 1, Regime::Real), std::invalid_argument);
    CHECK(regime_name(Regime::Complex) == "complex");
    CHECK_FALSE(source_name(BundleSource::Plane).empty());
}

TEST_CASE("CP^m lower bound against the minimum of kappa_case over (a, b)") {
    // (a even, b = 0) is the zero class and is excluded from the minimum.
    for (int m = 4; m <= 8; ++m) {
        int lowest = 1 << 20;
        for (long a = -2; a <= 2; ++a) {
            for (long b = -2; b <= 2; ++b) {
                if (b == 0 && a % 2 == 0) continue;
                lowest = std::min(lowest, kappa_case(m, a, b));
            }
        }
        const int marker = lambda_top(ManifoldSpec::complex_proj(m), 2, Regime::Complex).top_degree;
        const int b_zero = oracle::mod2_height_c1_g2(m) + 1;
        CHECK(lowest == std::min(marker, b_zero));
        if (m == 4 || m == 8) CHECK(lowest == marker);
        if (m >= 5 && m <= 7) CHECK(lowest == 7);  // below 2m - 2: the mod 2 height of c1 is 6
    }
}
