#include "charclass/manifold.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace charclass;

namespace {

int oracle_q(const Atom& a) {
    switch (a.family) {
        case Family::RealProj: return oracle::q_real_proj(a.m);
        case Family::ComplexProj: return oracle::q_complex_proj(a.m);
        case Family::QuatProj: return oracle::q_quat_proj(a.m);
        default: return 0;
    }
}

ManifoldSpec random_product(std::mt19937_64& rng, int max_dim) {
    std::vector<ManifoldSpec> factors;
    int dim = 0;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
        const auto family = static_cast<Family>(rng() % 4);
        const int m = 2 + static_cast<int>(rng() % 8);
        const auto f = ManifoldSpec::atom(family, m);
        if (dim + f.real_dimension() > max_dim) continue;
        dim += f.real_dimension();
        factors.push_back(f);
    }
    if (factors.empty()) factors.push_back(ManifoldSpec::sphere(2));
    return ManifoldSpec::product(factors);
}

}  // namespace

TEST_CASE("specs") {
    const auto p = ManifoldSpec::product({ManifoldSpec::sphere(3), ManifoldSpec::real_proj(5)});
    CHECK(p.to_string() == "S^3 x RP^5");
    CHECK(p.real_dimension() == 8);
    CHECK(p.is_closed());
    CHECK_FALSE(p.is_atom());
    CHECK(ManifoldSpec::complex_proj(3).real_dimension() == 6);
    CHECK(ManifoldSpec::quat_proj(2).real_dimension() == 8);
    CHECK_FALSE(ManifoldSpec::euclid(2).is_closed());
    CHECK(ManifoldSpec::euclid(1).real_dimension() == 1);
    CHECK_THROWS_AS(ManifoldSpec::real_proj(1), std::invalid_argument);
    CHECK_THROWS_AS(ManifoldSpec::sphere(0), std::invalid_argument);
    CHECK_THROWS_AS(ManifoldSpec::euclid(0), std::invalid_argument);
    CHECK_THROWS_AS(ManifoldSpec::product({}), std::invalid_argument);
    CHECK_THROWS(p.single());
    const auto nested = ManifoldSpec::product({p, ManifoldSpec::sphere(2)});
    CHECK(nested.factors().size() == 3);
}

TEST_CASE("Stiefel-Whitney classes of RP^5") {
    const auto rp5 = ManifoldSpec::real_proj(5);
    CHECK(total_sw(rp5).to_string() == "1 + a^2 + a^4");
    CHECK(dual_sw(rp5).to_string() == "1 + a^2");
    CHECK(top_dual_degree(rp5).q == 2);
    CHECK(series_mul(total_sw(rp5), dual_sw(rp5)) == GradedSeries::one(cohomology_shape(rp5)));
}

TEST_CASE("q: brute force, closed form and binomial parity agree on atoms") {
    for (int m = 2; m <= 64; ++m) {
        for (Family f : {Family::Sphere, Family::RealProj, Family::ComplexProj, Family::QuatProj}) {
            const auto spec = ManifoldSpec::atom(f, m);
            const int expect = oracle_q(spec.single());
            REQUIRE_MESSAGE(top_dual_degree(spec).q == expect, spec.to_string());
            REQUIRE_MESSAGE(top_dual_degree_closed_form(spec).q == expect, spec.to_string());
        }
    }
}

TEST_CASE("q is additive over products") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        const auto spec = random_product(rng, 40);
        int expect = 0;
        for (const auto& a : spec.factors()) expect += oracle_q(a);
        const int q = top_dual_degree(spec).q;
        CHECK_MESSAGE(q == expect, spec.to_string());
        CHECK(top_dual_degree_closed_form(spec).q == expect);
        CHECK(q <= spec.real_dimension());
    }
}

TEST_CASE("Euclidean factors contribute nothing") {
    const auto spec = ManifoldSpec::product({ManifoldSpec::euclid(3), ManifoldSpec::real_proj(6)});
    CHECK(top_dual_degree(spec).q == oracle::q_real_proj(6));
    CHECK(dual_sw(ManifoldSpec::euclid(4)).to_string() == "1");
    CHECK(cohomology_shape(spec)->generators.size() == 1);
}
