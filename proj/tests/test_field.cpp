#include "charclass/field.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace charclass;

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK(is_prime((std::uint64_t{1} << 61) - 1));
    CHECK_FALSE(is_prime((std::uint64_t{1} << 61) + 1));
    for (std::uint64_t n = 2; n < 2000; ++n) {
        bool trial = true;
        for (std::uint64_t d = 2; d * d <= n; ++d) trial = trial && n % d != 0;
        CHECK_MESSAGE(is_prime(n) == trial, n);
    }
}

TEST_CASE("prime field arithmetic") {
    const PrimeFieldElement a(5, 7), b(-3, 7);
    CHECK(b.value() == 4);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 1);
    CHECK((a * b).value() == 6);
    CHECK((-a).value() == 2);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(a.pow(6).value() == 1);
    std::ostringstream os;
    os << a;
    CHECK(os.str() == "5 (mod 7)");

    CHECK_THROWS_AS(PrimeFieldElement(1, 8), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFieldElement(0, 7).inverse(), std::domain_error);
    CHECK_THROWS_AS(a + PrimeFieldElement(1, 5), std::logic_error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 1000000007ULL, (1ULL << 61) - 1}) {
        std::uniform_int_distribution<std::int64_t> d(-1'000'000'000'000LL, 1'000'000'000'000LL);
        for (int i = 0; i < 200; ++i) {
            const PrimeFieldElement x(d(rng), p), y(d(rng), p), z(d(rng), p);
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x + y) - y == x);
            if (!x.is_zero()) CHECK(x * x.inverse() == PrimeFieldElement(1, p));
        }
    }
}

TEST_CASE("Lucas residues against Pascal's triangle") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const auto t = oracle::pascal_mod_p(200, p);
        for (int n = 0; n <= 200; ++n) {
            for (int k = 0; k <= 200; ++k) {
                REQUIRE(lucas_binom_mod_p(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), p) == t[n][k]);
            }
        }
    }
    CHECK(lucas_binom_mod_p(7, 3, 2) == 1);
    CHECK(lucas_binom_mod_p(6, 3, 2) == 0);
    CHECK(lucas_binom_mod_p(3, 5, 3) == 0);
    CHECK_THROWS_AS(lucas_binom_mod_p(5, 2, 4), std::invalid_argument);
}

TEST_CASE("Lucas for large arguments matches exact binomials") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<unsigned long> dn(0, 5000);
    for (int i = 0; i < 300; ++i) {
        const unsigned long n = dn(rng);
        const unsigned long k = std::uniform_int_distribution<unsigned long>(0, n)(rng);
        for (unsigned long p : {2UL, 3UL, 13UL, 10007UL}) {
            const mpz_class exact = oracle::binomial(n, k) % p;
            CHECK(lucas_binom_mod_p(n, k, p) == exact.get_ui());
        }
    }
}

TEST_CASE("digit sums") {
    CHECK(digit_sum_base_p(4, 2) == 1);
    CHECK(digit_sum_base_p(7, 2) == 3);
    CHECK(digit_sum_base_p(10, 3) == 2);
    CHECK_THROWS_AS(digit_sum_base_p(0, 2), std::invalid_argument);
    for (std::uint64_t k = 1; k < 3000; ++k) {
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) REQUIRE(digit_sum_base_p(k, p) == oracle::digit_sum(k, p));
    }
}

TEST_CASE("floor_log2 is exact at powers of two") {
    CHECK_THROWS(floor_log2(0));
    for (std::uint64_t m = 1; m < 5000; ++m) REQUIRE(floor_log2(m) == oracle::floor_log2(m));
    for (int j = 0; j < 63; ++j) {
        CHECK(floor_log2(std::uint64_t{1} << j) == j);
        if (j > 0) CHECK(floor_log2((std::uint64_t{1} << j) - 1) == j - 1);
    }
    CHECK(pow2(10) == 1024);
}
