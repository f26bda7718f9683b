#include "charclass/bounds.hpp"

#include "charclass/field.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace charclass {

std::string RegularQuery::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0) s += "+";
        s += "(" + pieces[i].spec.to_string() + "," + std::to_string(pieces[i].points) + ")";
    }
    return s;
}

namespace {

std::string piece_label(const Piece& p) { return "(" + p.spec.to_string() + "," + std::to_string(p.points) + ")"; }

std::int64_t sum_contributions(const std::vector<BreakdownEntry>& entries) {
    std::int64_t total = 0;
    for (const auto& e : entries) total += e.contribution();
    return total;
}

void attach_tightness(BoundReport& report, const RegularQuery& query) {
    auto existence = upper_existence(query);
    if (existence && existence->N == report.bound) report.tightness = std::move(existence);
}

// dim + q of one closed factor, which is its share of lambda.
std::int64_t factor_lambda(const Atom& a) {
    const int j = floor_log2(static_cast<std::uint64_t>(a.m));
    switch (a.family) {
        case Family::Sphere: return a.m;
        case Family::RealProj: return pow2(j + 1) - 1;
        case Family::ComplexProj: return pow2(j + 2) - 2;
        case Family::QuatProj: return pow2(j + 3) - 4;
        case Family::Euclid: break;
    }
    throw std::invalid_argument("Main Theorem I: Euclidean factor " + a.to_string() + " is not closed");
}

}  // namespace

std::int64_t main_theorem_i_closed_form(const ManifoldSpec& spec) {
    std::int64_t n = 2;
    int k2 = 0, k3 = 0, k4 = 0;
    for (const auto& a : spec.factors()) {
        const int j = floor_log2(static_cast<std::uint64_t>(a.m));
        switch (a.family) {
            case Family::Sphere: n += a.m; break;
            case Family::RealProj: n += pow2(j + 1); ++k2; break;
            case Family::ComplexProj: n += pow2(j + 2); ++k3; break;
            case Family::QuatProj: n += pow2(j + 3); ++k4; break;
            case Family::Euclid:
                throw std::invalid_argument("Main Theorem I: Euclidean factor " + a.to_string() + " is not closed");
        }
    }
    return n - k2 - 2 * k3 - 4 * k4;
}

BoundReport bound_product_2regular(const ManifoldSpec& spec) {
    BoundReport report{0, kMainTheoremI, {}, std::nullopt};
    for (const auto& a : spec.factors()) {
        report.breakdown.push_back({a.to_string(), factor_lambda(a), true, 0});
    }
    report.breakdown.push_back({"2 points", 0, true, 2});
    report.bound = sum_contributions(report.breakdown);
    attach_tightness(report, RegularQuery{{Piece{spec, 2}}, Regime::Real});
    return report;
}

bool in_main_theorem_ii_family(const RegularQuery& query) {
    if (query.regime != Regime::Real || query.pieces.empty()) return false;
    for (const auto& p : query.pieces) {
        if (!p.spec.is_atom()) return false;
        const Atom& a = p.spec.single();
        if (a.family == Family::Euclid) {
            if (a.m != 2 || p.points < 2 || !std::has_single_bit(static_cast<unsigned>(p.points))) return false;
        } else if (p.points != 2) {
            return false;
        }
    }
    return true;
}

std::int64_t main_theorem_ii_closed_form(const RegularQuery& query) {
    if (!in_main_theorem_ii_family(query)) {
        throw std::invalid_argument("Main Theorem II closed form: " + query.to_string() + " is outside its family");
    }
    std::int64_t n = 0;
    int k0 = 0, k1 = 0, k2 = 0, k4 = 0;
    for (const auto& p : query.pieces) {
        const Atom& a = p.spec.single();
        if (a.family == Family::Euclid) {
            const int d = std::countr_zero(static_cast<unsigned>(p.points));
            n += pow2(d + 1);
            ++k0;
            continue;
        }
        const int j = floor_log2(static_cast<std::uint64_t>(a.m));
        switch (a.family) {
            case Family::Sphere: n += a.m; ++k1; break;
            case Family::RealProj: n += pow2(j + 1); ++k2; break;
            case Family::ComplexProj: n += pow2(j + 2); break;
            case Family::QuatProj: n += pow2(j + 3); ++k4; break;
            case Family::Euclid: break;
        }
    }
    return n - k0 + 2 * k1 + k2 - 2 * k4;
}

BoundReport bound_disjoint(const RegularQuery& query) {
    if (query.pieces.empty()) throw std::invalid_argument("bound_disjoint: empty query");
    if (query.regime != Regime::Real) throw std::invalid_argument("bound_disjoint: query is not in the real regime");
    BoundReport report{0, in_main_theorem_ii_family(query) ? kMainTheoremII : kDisjointObstruction, {}, std::nullopt};
    for (const auto& p : query.pieces) {
        BundleProfile profile = [&] {
            try {
                return lambda_top(p.spec, p.points, Regime::Real);
            } catch (const std::invalid_argument& e) {
                throw NotDeterminedError("unsupported piece " + piece_label(p) + ": " + e.what());
            }
        }();
        report.breakdown.push_back({piece_label(p), profile.top_degree, profile.exact, p.points});
    }
    report.bound = sum_contributions(report.breakdown);
    attach_tightness(report, query);
    return report;
}

BoundReport bound_complex_disjoint(const RegularQuery& query) {
    if (query.pieces.empty()) throw std::invalid_argument("bound_complex_disjoint: empty query");
    if (query.regime != Regime::Complex) {
        throw std::invalid_argument("bound_complex_disjoint: query is not in the complex regime");
    }
    BoundReport report{0, kComplexDisjointObstruction, {}, std::nullopt};
    for (const auto& p : query.pieces) {
        BundleProfile profile = [&] {
            try {
                return lambda_top(p.spec, p.points, Regime::Complex);
            } catch (const std::invalid_argument& e) {
                throw NotDeterminedError("unsupported piece " + piece_label(p) + ": " + e.what());
            }
        }();
        report.breakdown.push_back({piece_label(p), profile.top_degree, profile.exact, p.points});
    }
    report.bound = sum_contributions(report.breakdown);
    attach_tightness(report, query);
    return report;
}

BoundReport bound_query(const RegularQuery& query) {
    return query.regime == Regime::Real ? bound_disjoint(query) : bound_complex_disjoint(query);
}

std::string cited_name(CitedKind kind) {
    switch (kind) {
        case CitedKind::BlzReal: return "Blagojevic-Lueck-Ziegler real k-regular bound";
        case CitedKind::BclzComplexPRegular: return "Blagojevic-Cohen-Lueck-Ziegler complex p-regular bound";
        case CitedKind::BclzComplexPrimePower: return "Blagojevic-Cohen-Lueck-Ziegler complex prime-power bound";
        case CitedKind::HandelDisjoint: return "Handel disjoint-union bound";
        case CitedKind::ComplexNpRegular: return "complex np-regular bound";
    }
    return "unknown";
}

namespace {

void require(bool ok, CitedKind kind, const std::string& what) {
    if (!ok) throw std::invalid_argument(cited_name(kind) + ": " + what);
}

void require_odd_prime(int p, CitedKind kind) {
    require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), kind, "p = " + std::to_string(p) + " is not an odd prime");
}

bool is_power_of(std::int64_t m, std::int64_t p) {
    if (m < 1) return false;
    while (m % p == 0) m /= p;
    return m == 1;
}

}  // namespace

BoundReport bound_cited(CitedKind kind, const CitedParams& params) {
    BoundReport report{0, cited_name(kind), {}, std::nullopt};
    const auto m = static_cast<std::int64_t>(params.m);
    switch (kind) {
        case CitedKind::BlzReal: {
            require(params.m >= 1, kind, "m must be >= 1");
            require(params.k >= 2, kind, "k must be >= 2");
            const auto a = static_cast<std::int64_t>(digit_sum_base_p(static_cast<std::uint64_t>(params.k), 2));
            const std::int64_t n = m * (params.k - a) + a;
            report.breakdown.push_back({"R^" + std::to_string(params.m), n - params.k, true, params.k});
            break;
        }
        case CitedKind::BclzComplexPRegular: {
            require(params.m >= 1, kind, "m must be >= 1");
            require_odd_prime(params.p, kind);
            const std::int64_t n = ((m + 1) / 2) * (params.p - 1) + 1;
            report.breakdown.push_back({"R^" + std::to_string(params.m), n - params.p, true, params.p});
            break;
        }
        case CitedKind::BclzComplexPrimePower: {
            require_odd_prime(params.p, kind);
            require(is_power_of(m, params.p), kind, "m = " + std::to_string(params.m) + " is not a power of p");
            require(params.k >= 2, kind, "k must be >= 2");
            const auto a = static_cast<std::int64_t>(
                digit_sum_base_p(static_cast<std::uint64_t>(params.k), static_cast<std::uint64_t>(params.p)));
            const std::int64_t n = m * (params.k - a) + a;
            report.breakdown.push_back({"C^" + std::to_string(params.m), n - params.k, true, params.k});
            break;
        }
        case CitedKind::HandelDisjoint: {
            require(!params.manifolds.empty(), kind, "needs at least one manifold");
            for (std::size_t i = 0; i < params.manifolds.size(); ++i) {
                const auto [dim, q] = params.manifolds[i];
                require(dim >= 1 && q >= 0 && q <= dim, kind, "need 0 <= q_i <= n_i with n_i >= 1");
                report.breakdown.push_back({"M_" + std::to_string(i + 1), dim + q, true, 2});
            }
            break;
        }
        case CitedKind::ComplexNpRegular: {
            require(params.n >= 1, kind, "n must be >= 1");
            require(params.m >= 1, kind, "m must be >= 1");
            require_odd_prime(params.p, kind);
            const std::int64_t per_copy = ((m + 1) / 2) * (params.p - 1) + 1;
            for (int i = 0; i < params.n; ++i) {
                report.breakdown.push_back(
                    {"R^" + std::to_string(params.m) + " copy " + std::to_string(i + 1), per_copy - params.p, true,
                     params.p});
            }
            break;
        }
    }
    report.bound = sum_contributions(report.breakdown);
    return report;
}

std::vector<TableRow> rp_table_rows(int m) {
    std::vector<TableRow> rows;
    const auto M = static_cast<std::int64_t>(m);
    const auto alpha = [](std::int64_t q) { return static_cast<std::int64_t>(std::popcount(static_cast<std::uint64_t>(q))); };
    const auto is_two_power_plus = [](std::int64_t x, std::int64_t c, int min_j) {
        const std::int64_t y = x - c;
        return y >= (std::int64_t{1} << min_j) && std::has_single_bit(static_cast<std::uint64_t>(y));
    };

    if ((M % 8 == 3 || M % 8 == 5) && M / 8 > 0) {
        rows.push_back({"m = 8q+3 or 8q+5, q > 0", "2m - min{5, alpha(q)}", 2 * M - std::min<std::int64_t>(5, alpha(M / 8))});
    }
    if (M % 8 == 1 && M / 8 > 0) {
        rows.push_back({"m = 8q+1, q > 0", "2m - min{7, alpha(q)} + 2", 2 * M - std::min<std::int64_t>(7, alpha(M / 8)) + 2});
    }
    if (M % 32 == 7 && M / 32 > 0) rows.push_back({"m = 32q+7, q > 0", "2m - 6", 2 * M - 6});
    if (M % 8 == 7 && M / 8 > 1) rows.push_back({"m = 8q+7, q > 1", "2m - 5", 2 * M - 5});
    if (M % 8 == 3 && M >= 19) rows.push_back({"m = 3 (mod 8), m >= 19", "2m - 4", 2 * M - 4});
    if (M % 4 == 1 && !is_two_power_plus(M, 1, 0)) rows.push_back({"m = 1 (mod 4), m != 2^i+1", "2m - 2", 2 * M - 2});
    if (M % 4 == 0 || M % 4 == 2) {
        const std::int64_t q = M / 4;
        if (q != 0 && !std::has_single_bit(static_cast<std::uint64_t>(q))) {
            rows.push_back({"m = 4q+i, i = 0 or 2, q != 2^j or 0", "2m - 1", 2 * M - 1});
        }
    }
    if (is_two_power_plus(M, 1, 2)) rows.push_back({"m = 2^j+1, j >= 2", "2m - 1", 2 * M - 1});
    if (is_two_power_plus(M, 2, 3)) rows.push_back({"m = 2^j+2, j >= 3", "2m", 2 * M});
    return rows;
}

std::optional<ExistenceRecord> rp_table_lookup(int m) {
    const auto rows = rp_table_rows(m);
    if (rows.empty()) return std::nullopt;
    const auto best = std::min_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.N < b.N; });
    return ExistenceRecord{best->N, "3-regular RP^m table row: " + best->condition + " (N >= " + best->formula + ")"};
}

namespace {

std::optional<ExistenceRecord> piece_existence(const Piece& p) {
    if (!p.spec.is_atom()) return std::nullopt;
    const Atom& a = p.spec.single();
    if (a.family == Family::Euclid && a.m == 2 && p.points >= 2) {
        return ExistenceRecord{2 * static_cast<std::int64_t>(p.points) - 1,
                               "Vandermonde map z -> (1, z, ..., z^{k-1}) on C = R^2"};
    }
    if (p.points > 3) return std::nullopt;
    if (a.family == Family::Sphere) {
        return ExistenceRecord{static_cast<std::int64_t>(a.m) + 2, "3-regular map (1, i) on S^m"};
    }
    if (a.family == Family::RealProj) return rp_table_lookup(a.m);
    return std::nullopt;
}

}  // namespace

std::optional<ExistenceRecord> upper_existence(const RegularQuery& query) {
    if (query.regime != Regime::Real || query.pieces.empty()) return std::nullopt;
    if (query.pieces.size() == 1) return piece_existence(query.pieces.front());
    std::int64_t total = 0;
    for (const auto& p : query.pieces) {
        auto e = piece_existence(p);
        if (!e) return std::nullopt;
        total += e->N;
    }
    return ExistenceRecord{total, "block direct sum of per-piece regular maps"};
}

}  // namespace charclass
