// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "charclass/bounds.hpp"
#include "charclass/field.hpp"
#include "charclass/grassmannian.hpp"
#include "charclass/sampler.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace charclass;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::int64_t p2(int e) { return std::int64_t{1} << e; }

Outcome closed_form_rp() {
    int bad = 0;
    for (int m = 2; m <= 64; ++m) {
        const int j = oracle::floor_log2(static_cast<std::uint64_t>(m));
        if (top_dual_degree(ManifoldSpec::real_proj(m)).q != p2(j + 1) - m - 1) ++bad;
    }
    return {bad == 0, "63 cases, " + std::to_string(bad) + " mismatches"};
}

Outcome closed_form_cp_hp() {
    int bad = 0;
    for (int m = 2; m <= 64; ++m) {
        const int j = oracle::floor_log2(static_cast<std::uint64_t>(m));
        if (top_dual_degree(ManifoldSpec::complex_proj(m)).q != p2(j + 2) - 2 * m - 2) ++bad;
        if (top_dual_degree(ManifoldSpec::quat_proj(m)).q != p2(j + 3) - 4 * m - 4) ++bad;
    }
    return {bad == 0, "126 cases, " + std::to_string(bad) + " mismatches"};
}

Outcome grassmannian_heights() {
    int bad = 0, cases = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto g = GrassmannPresentation::chern(k, n);
            const Height h = height(g, g.generator(1));
            ++cases;
            if (h.infinite || h.value != k * (n + 1 - k)) ++bad;
        }
    }
    for (int n = 2; n <= 8; ++n) {
        const auto g = GrassmannPresentation::chern(2, n);
        ++cases;
        if (height(g, g.generator(1)).value != 2 * n - 2) ++bad;
    }
    return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"};
}

Outcome corollaries() {
    int bad = 0, cases = 0;
    const auto check = [&](const ManifoldSpec& s, std::int64_t expect) {
        ++cases;
        if (bound_product_2regular(s).bound != expect) ++bad;
    };
    for (int m = 2; m <= 64; ++m) {
        const int i = oracle::floor_log2(static_cast<std::uint64_t>(m));
        check(ManifoldSpec::sphere(m), m + 2);
        check(ManifoldSpec::real_proj(m), p2(i + 1) + 1);
        check(ManifoldSpec::complex_proj(m), p2(i + 2));
        check(ManifoldSpec::quat_proj(m), p2(i + 3) - 2);
    }
    for (int i = 1; p2(i) + 1 <= 64; ++i) {
        const int m = static_cast<int>(p2(i)) + 1;
        check(ManifoldSpec::real_proj(m), 2 * m - 1);
    }
    return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"};
}

Piece random_piece(std::mt19937_64& rng) {
    const int family = static_cast<int>(rng() % 5);
    if (family == 4) return {ManifoldSpec::euclid(2), static_cast<int>(p2(1 + static_cast<int>(rng() % 6)))};
    return {ManifoldSpec::atom(static_cast<Family>(family), 2 + static_cast<int>(rng() % 30)), 2};
}

Outcome main_theorem_ii() {
    std::mt19937_64 rng(20240501);
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
        RegularQuery q;
        const int n = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i) q.pieces.push_back(random_piece(rng));
        std::int64_t piecewise = 0;
        for (const auto& p : q.pieces) piecewise += lambda_top(p.spec, p.points, Regime::Real).top_degree + p.points;
        if (main_theorem_ii_closed_form(q) != piecewise || bound_disjoint(q).bound != piecewise) ++bad;
    }
    return {bad == 0, "200 queries, " + std::to_string(bad) + " mismatches"};
}

Outcome handel_recovery() {
    std::mt19937_64 rng(777);
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
        RegularQuery q;
        const int n = 1 + static_cast<int>(rng() % 5);
        std::int64_t expect = 2 * n;
        for (int i = 0; i < n; ++i) {
            const auto spec = ManifoldSpec::atom(static_cast<Family>(rng() % 4), 2 + static_cast<int>(rng() % 20));
            q.pieces.push_back({spec, 2});
            expect += spec.real_dimension() + top_dual_degree(spec).q;
        }
        if (bound_disjoint(q).bound != expect) ++bad;
    }
    return {bad == 0, "100 cases, " + std::to_string(bad) + " mismatches"};
}

Outcome kappa_cases() {
    int bad = 0, cases = 0;
    std::ostringstream failures;
    for (int m = 4; m <= 8; ++m) {
        const auto g = GrassmannPresentation::chern(2, m);
        const int h = height(g, g.generator(1)).value;
        for (long a = -2; a <= 2; ++a) {
            for (long b = -2; b <= 2; ++b) {
                if (a == 0 && b == 0) continue;
                ++cases;
                std::string why;
                try {
                    const int kappa = kappa_case(m, a, b);
                    if (kappa < 2 * m - 2) why = "kappa=" + std::to_string(kappa) + " < 2m-2";
                    else if (b != 0 && kappa < h) why = "kappa=" + std::to_string(kappa) + " < h(m)";
                    else if (b == 0 && kappa != h + 1) why = "kappa=" + std::to_string(kappa) + " != h(m)+1";
                } catch (const std::exception& e) {
                    why = std::string("no value: ") + e.what();
                }
                if (!why.empty()) {
                    ++bad;
                    if (bad <= 6) failures << " [m=" << m << " a=" << a << " b=" << b << ": " << why << "]";
                }
            }
        }
    }
    std::string detail = std::to_string(cases) + " cases, " + std::to_string(bad) + " failures";
    if (bad > 0) detail += failures.str() + (bad > 6 ? " ..." : "");
    return {bad == 0, detail};
}

bool same_report(const RegularityReport& a, const RegularityReport& b) {
    if (a.violations != b.violations || a.exact_certified != b.exact_certified ||
        a.min_singular_ratio != b.min_singular_ratio || a.witness.has_value() != b.witness.has_value()) {
        return false;
    }
    if (!a.witness) return true;
    if (a.witness->trial != b.witness->trial || a.witness->points.size() != b.witness->points.size()) return false;
    for (std::size_t i = 0; i < a.witness->points.size(); ++i) {
        if (a.witness->points[i].coords != b.witness->points[i].coords) return false;
    }
    return true;
}

Outcome regularity() {
    constexpr std::uint64_t trials = 10000, seed = 2024;
    std::ostringstream issues;
    for (int k = 2; k <= 8; ++k) {
        const auto r = sample_check_regular(ExampleMap::vandermonde(k), {k}, trials, seed);
        if (r.violations != 0 || r.exact_certified != trials) issues << " Vandermonde(" << k << ")";
    }
    for (int m = 2; m <= 6; ++m) {
        const auto map = ExampleMap::sphere_one_i(m);
        const auto ok = sample_check_regular(map, {3}, trials, seed);
        if (ok.violations != 0) issues << " SphereOneI(" << m << ") 3-tuples";
        const auto over = sample_check_regular(map, {m + 3}, 1000, seed);
        if (over.violations != over.trials || !over.witness || !witness_reproduces(map, *over.witness)) {
            issues << " SphereOneI(" << m << ") " << m + 3 << "-tuples";
        }
    }
    const auto sum = ExampleMap::direct_sum({ExampleMap::vandermonde(5), ExampleMap::sphere_one_i(4)});
    const auto a = sample_check_regular(sum, {5, 3}, 2000, seed);
    const auto b = sample_check_regular(sum, {5, 3}, 2000, seed);
    const auto c = sample_check_regular_serial(sum, {5, 3}, 2000, seed);
    if (a.violations != 0 || !same_report(a, b) || !same_report(a, c)) issues << " determinism";
    const std::string s = issues.str();
    return {s.empty(), s.empty() ? "Vandermonde k=2..8 and SphereOneI m=2..6 at 10^4 trials, m+3 always violates"
                                 : "failed:" + s};
}

Outcome lucas() {
    int bad = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto t = oracle::pascal_mod_p(512, p);
        for (std::uint64_t n = 0; n <= 512; ++n) {
            for (std::uint64_t k = 0; k <= 512; ++k) {
                if (lucas_binom_mod_p(n, k, p) != t[n][k]) ++bad;
            }
        }
    }
    return {bad == 0, "3 x 513^2 cases, " + std::to_string(bad) + " mismatches"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "RP^m q: brute force vs closed form, m in [2,64]", 1, closed_form_rp},
        {2, "CP^m, HP^m q: brute force vs closed form, m in [2,64]", 1, closed_form_cp_hp},
        {3, "Grassmannian heights of c1, 1 <= k <= n <= 6 and h(n) = 2n-2", 30, grassmannian_heights},
        {4, "corollary bounds for S^m, RP^m, CP^m, HP^m, RP^{2^i+1}", 1e9, corollaries},
        {5, "Main Theorem II closed form vs piecewise sum, 200 queries", 1e9, main_theorem_ii},
        {6, "Handel recovery, 100 cases", 1e9, handel_recovery},
        {7, "kappa case analysis, m in 4..8, (a,b) in [-2,2]^2 \\ 0", 60, kappa_cases},
        {8, "regularity sampling: Vandermonde, SphereOneI, determinism", 60, regularity},
        {9, "Lucas vs Pascal, n,k <= 512, p in {2,3,5}", 5, lucas},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            o.pass = false;
            o.detail += "; over time budget";
        }
        if (!o.pass) ++failed;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << time.str()
                  << " s) -- " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
