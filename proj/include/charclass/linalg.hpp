#pragma once

// Exact row reduction over Z/p or Q.
//
// Two kernels produce the same reduced row echelon form: a serial reference
// and an OpenMP one that eliminates a pivot column from all other rows in
// parallel. Pivots are chosen column by column (caller's column order), first
// eligible row wins, so both kernels are deterministic and agree bit for bit.

#include "charclass/series.hpp"

#include <cstdint>
#include <vector>

namespace charclass {

using Row = std::vector<mpq_class>;

struct Echelon {
    std::size_t columns = 0;
    /// Reduced rows; rows[i] has a leading 1 in pivot_columns[i].
    std::vector<Row> rows;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const noexcept { return rows.size(); }
    bool is_pivot(std::size_t column) const;
    /// Subtracts multiples of the echelon rows so v has zeros in every pivot column.
    Row reduce(Row v, const Domain& domain) const;
};

Echelon row_reduce_serial(std::vector<Row> rows, std::size_t columns, const Domain& domain);
Echelon row_reduce_parallel(std::vector<Row> rows, std::size_t columns, const Domain& domain);

/// Dispatches to the parallel kernel when OpenMP is available and the matrix is
/// large enough to amortize thread start-up.
Echelon row_reduce(std::vector<Row> rows, std::size_t columns, const Domain& domain);

std::size_t exact_rank(const std::vector<Row>& rows, std::size_t columns, const Domain& domain);

/// Rank over Z/p of a matrix with entries already reduced to [0, p). A full
/// rank here certifies full rank over Q for any integer lift.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t columns, std::uint64_t p);

}  // namespace charclass
