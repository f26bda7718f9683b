#include "charclass/linalg.hpp"

#include "charclass/field.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace charclass {

bool Echelon::is_pivot(std::size_t column) const {
    return std::find(pivot_columns.begin(), pivot_columns.end(), column) != pivot_columns.end();
}

Row Echelon::reduce(Row v, const Domain& domain) const {
    if (v.size() != columns) throw std::invalid_argument("Echelon::reduce: vector length mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const mpq_class f = v[pivot_columns[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t c = 0; c < columns; ++c) {
            if (sgn(rows[i][c]) != 0) v[c] = domain.normalize(v[c] - f * rows[i][c]);
        }
    }
    return v;
}

namespace {

void check_shape(const std::vector<Row>& rows, std::size_t columns) {
    for (const auto& r : rows) {
        if (r.size() != columns) throw std::invalid_argument("row_reduce: ragged matrix");
    }
}

void eliminate_row(Row& target, const Row& pivot_row, std::size_t pivot_col, const Domain& domain) {
    const mpq_class f = target[pivot_col];
    if (sgn(f) == 0) return;
    for (std::size_t c = 0; c < target.size(); ++c) {
        if (sgn(pivot_row[c]) != 0) target[c] = domain.normalize(target[c] - f * pivot_row[c]);
    }
}

template <bool Parallel>
Echelon row_reduce_impl(std::vector<Row> rows, std::size_t columns, const Domain& domain) {
    check_shape(rows, columns);
    for (auto& r : rows) {
        for (auto& x : r) x = domain.normalize(x);
    }
    Echelon out;
    out.columns = columns;
    std::size_t next = 0;
    const auto n = static_cast<std::ptrdiff_t>(rows.size());
    for (std::size_t col = 0; col < columns && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        const mpq_class inv = domain.inverse(rows[next][col]);
        for (auto& x : rows[next]) {
            if (sgn(x) != 0) x = domain.normalize(x * inv);
        }
        const Row& prow = rows[next];
        const auto skip = static_cast<std::ptrdiff_t>(next);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t r = 0; r < n; ++r) {
                if (r != skip) eliminate_row(rows[static_cast<std::size_t>(r)], prow, col, domain);
            }
        } else {
            for (std::ptrdiff_t r = 0; r < n; ++r) {
                if (r != skip) eliminate_row(rows[static_cast<std::size_t>(r)], prow, col, domain);
            }
        }
        out.pivot_columns.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

}  // namespace

Echelon row_reduce_serial(std::vector<Row> rows, std::size_t columns, const Domain& domain) {
    return row_reduce_impl<false>(std::move(rows), columns, domain);
}

Echelon row_reduce_parallel(std::vector<Row> rows, std::size_t columns, const Domain& domain) {
    return row_reduce_impl<true>(std::move(rows), columns, domain);
}

Echelon row_reduce(std::vector<Row> rows, std::size_t columns, const Domain& domain) {
#ifdef _OPENMP
    if (rows.size() * columns >= 4096 && omp_get_max_threads() > 1) {
        return row_reduce_parallel(std::move(rows), columns, domain);
    }
#endif
    return row_reduce_serial(std::move(rows), columns, domain);
}

std::size_t exact_rank(const std::vector<Row>& rows, std::size_t columns, const Domain& domain) {
    return row_reduce(rows, columns, domain).rank();
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t columns, std::uint64_t p) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint64_t inv = pow_mod(rows[rank][col] % p, p - 2, p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const std::uint64_t f = mul_mod(rows[r][col] % p, inv, p);
            if (f == 0) continue;
            for (std::size_t c = col; c < columns; ++c) {
                const std::uint64_t sub = mul_mod(f, rows[rank][c] % p, p);
                const std::uint64_t x = rows[r][c] % p;
                rows[r][c] = x >= sub ? x - sub : x + (p - sub);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace charclass
