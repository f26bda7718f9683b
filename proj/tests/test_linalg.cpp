#include "charclass/linalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace charclass;

namespace {

std::vector<Row> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_hint) {
    // Products of random rows x cols factors give a controlled rank ceiling.
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<Row> left(rows, Row(static_cast<std::size_t>(rank_hint)));
    std::vector<Row> right(static_cast<std::size_t>(rank_hint), Row(cols));
    for (auto& r : left) for (auto& x : r) x = d(rng);
    for (auto& r : right) for (auto& x : r) x = mpq_class(d(rng), 1 + (d(rng) + 4) % 3);
    std::vector<Row> out(rows, Row(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < static_cast<std::size_t>(rank_hint); ++k)
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += left[i][k] * right[k][j];
    return out;
}

}  // namespace

TEST_CASE("rank matches an independent elimination over Q") {
    std::mt19937_64 rng(17);
    const Domain q = Domain::rationals();
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        const int hint = 1 + static_cast<int>(rng() % 6);
        const auto m = random_matrix(rng, rows, cols, hint);
        REQUIRE(exact_rank(m, cols, q) == oracle::rational_rank(m));
    }
}

TEST_CASE("serial and parallel kernels agree exactly") {
    std::mt19937_64 rng(23);
    for (const Domain d : {Domain::rationals(), Domain::prime(2), Domain::prime(7)}) {
        for (int t = 0; t < 10; ++t) {
            auto m = random_matrix(rng, 40, 40, 25);
            for (auto& r : m) for (auto& x : r) x = d.normalize(mpq_class(x.get_num()));
            const Echelon a = row_reduce_serial(m, 40, d);
            const Echelon b = row_reduce_parallel(m, 40, d);
            REQUIRE(a.pivot_columns == b.pivot_columns);
            REQUIRE(a.rows == b.rows);
            REQUIRE(row_reduce(m, 40, d).rows == a.rows);
        }
    }
}

TEST_CASE("echelon form is reduced and reduce() clears pivots") {
    std::mt19937_64 rng(29);
    const Domain q = Domain::rationals();
    const auto m = random_matrix(rng, 7, 6, 4);
    const Echelon e = row_reduce_serial(m, 6, q);
    CHECK(e.rank() == 4);
    for (std::size_t i = 0; i < e.rank(); ++i) {
        for (std::size_t j = 0; j < e.rank(); ++j) {
            CHECK(e.rows[i][e.pivot_columns[j]] == (i == j ? 1 : 0));
        }
    }
    for (const auto& r : m) {
        const Row red = e.reduce(r, q);
        for (const auto& x : red) CHECK(x == 0);
    }
}

TEST_CASE("rank mod p") {
    const std::uint64_t p = 5;
    CHECK(rank_mod_p({{1, 2}, {2, 4}}, 2, p) == 1);
    CHECK(rank_mod_p({{1, 2}, {3, 1}}, 2, p) == 1);  // 1*1 - 2*3 = -5
    CHECK(rank_mod_p({{1, 2}, {3, 2}}, 2, p) == 2);
    CHECK(rank_mod_p({}, 3, p) == 0);
    CHECK_THROWS(exact_rank({Row{1, 2}, Row{1}}, 2, Domain::rationals()));
}
