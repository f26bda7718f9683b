#pragma once

// Lower bounds on N for k-regular maps into R^N / C^N, and the matching
// existence data where a construction is known.

#include "charclass/bundles.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charclass {

struct Piece {
    ManifoldSpec spec;
    int points;

    bool operator==(const Piece&) const = default;
};

/// (M_1,k_1; ...; M_n,k_n) with a regime.
struct RegularQuery {
    std::vector<Piece> pieces;
    Regime regime = Regime::Real;

    /// "(S^4,2)+(R^2,8)".
    std::string to_string() const;
    bool operator==(const RegularQuery&) const = default;
};

struct BreakdownEntry {
    std::string piece;
    /// lambda_i / tau_i, or a lower bound on it when !exact.
    std::int64_t top_degree;
    bool exact;
    int points;
    std::int64_t contribution() const noexcept { return top_degree + points; }
};

struct ExistenceRecord {
    std::int64_t N;
    std::string source;
};

struct BoundReport {
    std::int64_t bound;
    std::string theorem;
    std::vector<BreakdownEntry> breakdown;
    /// Present only when a known construction attains the bound.
    std::optional<ExistenceRecord> tightness;
};

inline constexpr const char* kMainTheoremI = "Main Theorem I";
inline constexpr const char* kMainTheoremII = "Main Theorem II";
inline constexpr const char* kDisjointObstruction = "disjoint-union obstruction";
inline constexpr const char* kComplexDisjointObstruction = "complex disjoint-union obstruction";

/// 2-regular maps on products of spheres and real/complex/quaternionic
/// projective spaces (every factor m >= 2).
BoundReport bound_product_2regular(const ManifoldSpec& spec);
/// The explicit sum with the -k2 - 2k3 - 4k4 + 2 correction.
std::int64_t main_theorem_i_closed_form(const ManifoldSpec& spec);

/// N >= sum (lambda_i + k_i), real regime.
BoundReport bound_disjoint(const RegularQuery& query);
/// True when every piece is (R^2, 2^d) or (X^m, 2) with X in {S, RP, CP, HP}.
bool in_main_theorem_ii_family(const RegularQuery& query);
/// sum 2^{d_s+1} + sum m_1 + sum 2^{[log2 m]+1} + ... - k0 + 2k1 + k2 - 2k4.
std::int64_t main_theorem_ii_closed_form(const RegularQuery& query);

/// N >= sum (tau_i + k_i), complex regime; pieces (S^m,2), (CP^m,2) m >= 4,
/// (R^m, p) p an odd prime.
BoundReport bound_complex_disjoint(const RegularQuery& query);

/// Dispatches on the query's regime.
BoundReport bound_query(const RegularQuery& query);

enum class CitedKind {
    BlzReal,                ///< k-regular R^m -> R^N:  m(k - alpha(k)) + alpha(k)
    BclzComplexPRegular,    ///< complex p-regular R^m -> C^N:  [(m+1)/2](p-1) + 1
    BclzComplexPrimePower,  ///< complex k-regular C^m -> C^N, m a power of p:  m(k - alpha_p(k)) + alpha_p(k)
    HandelDisjoint,         ///< 2k-regular on k closed manifolds:  2k + sum (n_i + q_i)
    ComplexNpRegular,       ///< complex np-regular R^m -> C^N:  n([(m+1)/2](p-1) + 1)
};

struct CitedParams {
    int m = 0;
    int k = 0;
    int p = 0;
    int n = 0;
    /// (n_i, q_i) for HandelDisjoint.
    std::vector<std::pair<int, int>> manifolds;
};

std::string cited_name(CitedKind kind);
BoundReport bound_cited(CitedKind kind, const CitedParams& params);

/// One row of the 3-regular RP^m existence table.
struct TableRow {
    std::string condition;
    std::string formula;
    std::int64_t N;
};

/// Every table row whose side conditions hold for m, in table order.
std::vector<TableRow> rp_table_rows(int m);
/// Smallest N among the matching rows.
std::optional<ExistenceRecord> rp_table_lookup(int m);

/// Smallest N for which a known construction gives a map of the query's kind:
/// Vandermonde maps on R^2, (1, i) on spheres, the RP^m table, and block direct
/// sums over disjoint unions. nullopt when no data applies.
std::optional<ExistenceRecord> upper_existence(const RegularQuery& query);

}  // namespace charclass
