#include "charclass/sampler.hpp"

#include "charclass/field.hpp"
#include "charclass/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace charclass {

namespace {

constexpr std::uint64_t kCertPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(splitmix64(seed) ^ trial); }

std::uint64_t mod_p(const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), kCertPrime);
    return r.get_ui();
}

std::vector<Row> vandermonde_rows(const std::vector<GaussianRational>& points, int k) {
    std::vector<Row> rows;
    rows.reserve(points.size());
    for (const auto& z : points) {
        Row row(static_cast<std::size_t>(2 * k - 1));
        row[0] = 1;
        mpq_class re = 1, im = 0;
        for (int j = 1; j < k; ++j) {
            const mpq_class nre = re * z.re - im * z.im;
            const mpq_class nim = re * z.im + im * z.re;
            re = nre;
            im = nim;
            row[static_cast<std::size_t>(2 * j - 1)] = re;
            row[static_cast<std::size_t>(2 * j)] = im;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void require_distinct(const std::vector<GaussianRational>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw std::invalid_argument("vandermonde_rank_exact: points " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");
            }
        }
    }
}

// Rows scaled by D^{k-1} are integral; full rank mod p then certifies full rank.
std::optional<std::size_t> vandermonde_rank_certified(const std::vector<GaussianRational>& points, int k) {
    mpz_class d = 1;
    for (const auto& z : points) {
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), z.re.get_den_mpz_t());
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), z.im.get_den_mpz_t());
    }
    const std::uint64_t dp = mod_p(d);
    if (dp == 0) return std::nullopt;
    std::vector<std::uint64_t> dpow(static_cast<std::size_t>(k), 1);
    for (int j = 1; j < k; ++j) dpow[static_cast<std::size_t>(j)] = mul_mod(dpow[static_cast<std::size_t>(j - 1)], dp, kCertPrime);

    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& z : points) {
        const std::uint64_t a = mod_p(mpz_class(z.re * d));
        const std::uint64_t b = mod_p(mpz_class(z.im * d));
        std::vector<std::uint64_t> row(static_cast<std::size_t>(2 * k - 1));
        std::uint64_t re = 1, im = 0;
        row[0] = dpow[static_cast<std::size_t>(k - 1)];
        for (int j = 1; j < k; ++j) {
            const std::uint64_t nre = (mul_mod(re, a, kCertPrime) + kCertPrime - mul_mod(im, b, kCertPrime)) % kCertPrime;
            const std::uint64_t nim = (mul_mod(re, b, kCertPrime) + mul_mod(im, a, kCertPrime)) % kCertPrime;
            re = nre;
            im = nim;
            const std::uint64_t scale = dpow[static_cast<std::size_t>(k - 1 - j)];
            row[static_cast<std::size_t>(2 * j - 1)] = mul_mod(re, scale, kCertPrime);
            row[static_cast<std::size_t>(2 * j)] = mul_mod(im, scale, kCertPrime);
        }
        rows.push_back(std::move(row));
    }
    const std::size_t r = rank_mod_p(std::move(rows), static_cast<std::size_t>(2 * k - 1), kCertPrime);
    if (r == points.size()) return r;
    return std::nullopt;
}

struct BlockRank {
    std::size_t rank;
    bool exact;
    std::optional<double> singular_ratio;
};

BlockRank vandermonde_block_rank(const std::vector<GaussianRational>& points, int k) {
    if (points.empty()) return {0, true, std::nullopt};
    if (auto r = vandermonde_rank_certified(points, k)) return {*r, true, std::nullopt};
    return {vandermonde_rank_exact(points, k), true, std::nullopt};
}

BlockRank sphere_block_rank(const std::vector<std::vector<double>>& points, int m) {
    if (points.empty()) return {0, false, std::nullopt};
    const auto t = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd a(t, m + 2);
    for (Eigen::Index i = 0; i < t; ++i) {
        a(i, 0) = 1.0;
        for (int j = 0; j <= m; ++j) a(i, j + 1) = points[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& s = svd.singularValues();
    const double top = s(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > kRelativeRankTolerance * top) ++rank;
    }
    const double ratio = t <= s.size() && top > 0 ? s(t - 1) / top : 0.0;
    return {rank, false, ratio};
}

GaussianRational to_gaussian(const SamplePoint& p) {
    if (p.coords.size() != 2) throw std::invalid_argument("Vandermonde sample point needs 2 coordinates");
    return {p.coords[0], p.coords[1]};
}

std::vector<double> to_doubles(const SamplePoint& p) {
    std::vector<double> v;
    v.reserve(p.coords.size());
    for (const auto& c : p.coords) v.push_back(c.get_d());
    return v;
}

struct TupleRank {
    std::size_t rank = 0;
    bool all_exact = true;
    std::optional<double> singular_ratio;
};

TupleRank rank_of_tuple(const ExampleMap& map, const std::vector<SamplePoint>& points) {
    const auto& blocks = map.blocks();
    TupleRank out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        BlockRank br{};
        if (blocks[b].kind == MapKind::Vandermonde) {
            std::vector<GaussianRational> zs;
            for (const auto& p : points) {
                if (p.block == b) zs.push_back(to_gaussian(p));
            }
            br = vandermonde_block_rank(zs, blocks[b].parameter);
        } else {
            std::vector<std::vector<double>> xs;
            for (const auto& p : points) {
                if (p.block == b) xs.push_back(to_doubles(p));
            }
            br = sphere_block_rank(xs, blocks[b].parameter);
        }
        out.rank += br.rank;
        out.all_exact = out.all_exact && br.exact;
        if (br.singular_ratio) {
            out.singular_ratio = out.singular_ratio ? std::min(*out.singular_ratio, *br.singular_ratio) : *br.singular_ratio;
        }
    }
    return out;
}

std::vector<SamplePoint> draw_tuple(const ExampleMap& map, const std::vector<int>& sizes, std::mt19937_64& rng) {
    std::vector<SamplePoint> points;
    const auto& blocks = map.blocks();
    std::uniform_int_distribution<int> grid(-kGridDenominator, kGridDenominator);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<std::vector<double>> drawn;
        while (drawn.size() < static_cast<std::size_t>(sizes[b])) {
            std::vector<double> x;
            if (blocks[b].kind == MapKind::Vandermonde) {
                x = {static_cast<double>(grid(rng)), static_cast<double>(grid(rng))};
            } else {
                x.resize(static_cast<std::size_t>(blocks[b].parameter + 1));
                double norm = 0;
                for (auto& c : x) {
                    c = normal(rng);
                    norm += c * c;
                }
                norm = std::sqrt(norm);
                if (norm < 1e-12) continue;
                for (auto& c : x) c /= norm;
            }
            const double scale = blocks[b].kind == MapKind::Vandermonde ? 1.0 / kGridDenominator : 1.0;
            const bool too_close = std::any_of(drawn.begin(), drawn.end(), [&](const auto& y) {
                double d2 = 0;
                for (std::size_t i = 0; i < x.size(); ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]) * scale * scale;
                return std::sqrt(d2) < kMinSeparation * (1 - 1e-9);
            });
            if (!too_close) drawn.push_back(std::move(x));
        }
        for (const auto& x : drawn) {
            SamplePoint p{b, {}};
            if (blocks[b].kind == MapKind::Vandermonde) {
                p.coords = {mpq_class(static_cast<long>(x[0]), kGridDenominator),
                            mpq_class(static_cast<long>(x[1]), kGridDenominator)};
                for (auto& c : p.coords) c.canonicalize();
            } else {
                for (double c : x) p.coords.emplace_back(c);
            }
            points.push_back(std::move(p));
        }
    }
    return points;
}

struct TrialResult {
    std::size_t rank = 0;
    bool all_exact = true;
    std::optional<double> singular_ratio;
    std::vector<SamplePoint> points;  // kept only on violation
};

TrialResult run_trial(const ExampleMap& map, const std::vector<int>& sizes, std::uint64_t seed, std::uint64_t trial,
                      std::size_t expected) {
    std::mt19937_64 rng(trial_seed(seed, trial));
    auto points = draw_tuple(map, sizes, rng);
    const TupleRank r = rank_of_tuple(map, points);
    TrialResult out{r.rank, r.all_exact, r.singular_ratio, {}};
    if (r.rank < expected) out.points = std::move(points);
    return out;
}

RegularityReport make_report(const ExampleMap& map, const std::vector<int>& sizes, std::uint64_t trials,
                             std::uint64_t seed) {
    if (sizes.size() != map.blocks().size()) {
        throw std::invalid_argument("sample_check_regular: " + std::to_string(sizes.size()) + " tuple sizes for " +
                                    std::to_string(map.blocks().size()) + " domain pieces");
    }
    RegularityReport report;
    report.map = map.to_string();
    report.ambient_dimension = map.ambient_dimension();
    report.tuple_sizes = sizes;
    report.seed = seed;
    report.trials = trials;
    const auto claims = map.claimed_regularity();
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (sizes[b] < 1) throw std::invalid_argument("sample_check_regular: tuple sizes must be >= 1");
        if (sizes[b] > claims[b]) {
            report.warnings.push_back("piece " + std::to_string(b + 1) + " (" + map.blocks()[b].to_string() +
                                      "): tuple size " + std::to_string(sizes[b]) + " exceeds claimed regularity " +
                                      std::to_string(claims[b]) + "; violations are expected");
        }
    }
    return report;
}

void merge(RegularityReport& report, std::vector<TrialResult>& results, std::size_t expected) {
    for (std::uint64_t t = 0; t < results.size(); ++t) {
        auto& r = results[t];
        if (r.rank == expected && r.all_exact) ++report.exact_certified;
        if (r.singular_ratio) {
            report.min_singular_ratio =
                report.min_singular_ratio ? std::min(*report.min_singular_ratio, *r.singular_ratio) : *r.singular_ratio;
        }
        if (r.rank < expected) {
            ++report.violations;
            if (!report.witness) report.witness = Witness{t, std::move(r.points), r.rank, expected};
        }
    }
}

std::size_t expected_rank(const std::vector<int>& sizes) {
    std::size_t e = 0;
    for (int s : sizes) e += static_cast<std::size_t>(s);
    return e;
}

}  // namespace

std::size_t vandermonde_rank_exact(const std::vector<GaussianRational>& points, int k) {
    if (k < 1) throw std::invalid_argument("vandermonde_rank_exact: k must be >= 1");
    require_distinct(points);
    if (points.empty()) return 0;
    return exact_rank(vandermonde_rows(points, k), static_cast<std::size_t>(2 * k - 1), Domain::rationals());
}

int LeafMap::ambient_dimension() const { return kind == MapKind::Vandermonde ? 2 * parameter - 1 : parameter + 2; }
int LeafMap::domain_dimension() const { return kind == MapKind::Vandermonde ? 2 : parameter + 1; }
int LeafMap::claimed_regularity() const { return kind == MapKind::Vandermonde ? parameter : 3; }

std::string LeafMap::to_string() const {
    return kind == MapKind::Vandermonde ? "Vandermonde(" + std::to_string(parameter) + ")"
                                        : "SphereOneI(" + std::to_string(parameter) + ")";
}

ExampleMap ExampleMap::vandermonde(int k) {
    if (k < 1) throw std::invalid_argument("Vandermonde map needs k >= 1");
    return ExampleMap({LeafMap{MapKind::Vandermonde, k}});
}

ExampleMap ExampleMap::sphere_one_i(int m) {
    if (m < 1) throw std::invalid_argument("SphereOneI map needs m >= 1");
    return ExampleMap({LeafMap{MapKind::SphereOneI, m}});
}

ExampleMap ExampleMap::direct_sum(const std::vector<ExampleMap>& parts) {
    if (parts.empty()) throw std::invalid_argument("DirectSum needs at least one part");
    std::vector<LeafMap> blocks;
    for (const auto& p : parts) blocks.insert(blocks.end(), p.blocks_.begin(), p.blocks_.end());
    return ExampleMap(std::move(blocks));
}

int ExampleMap::ambient_dimension() const {
    int n = 0;
    for (const auto& b : blocks_) n += b.ambient_dimension();
    return n;
}

std::vector<int> ExampleMap::claimed_regularity() const {
    std::vector<int> out;
    for (const auto& b : blocks_) out.push_back(b.claimed_regularity());
    return out;
}

std::string ExampleMap::to_string() const {
    if (blocks_.size() == 1) return blocks_.front().to_string();
    std::string s = "DirectSum(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0) s += ", ";
        s += blocks_[i].to_string();
    }
    return s + ")";
}

RegularityReport sample_check_regular_serial(const ExampleMap& map, const std::vector<int>& tuple_sizes,
                                             std::uint64_t trials, std::uint64_t seed) {
    RegularityReport report = make_report(map, tuple_sizes, trials, seed);
    const std::size_t expected = expected_rank(tuple_sizes);
    std::vector<TrialResult> results(trials);
    for (std::uint64_t t = 0; t < trials; ++t) results[t] = run_trial(map, tuple_sizes, seed, t, expected);
    merge(report, results, expected);
    return report;
}

RegularityReport sample_check_regular_parallel(const ExampleMap& map, const std::vector<int>& tuple_sizes,
                                               std::uint64_t trials, std::uint64_t seed) {
    RegularityReport report = make_report(map, tuple_sizes, trials, seed);
    const std::size_t expected = expected_rank(tuple_sizes);
    std::vector<TrialResult> results(trials);
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t t = 0; t < n; ++t) {
        results[static_cast<std::size_t>(t)] =
            run_trial(map, tuple_sizes, seed, static_cast<std::uint64_t>(t), expected);
    }
    merge(report, results, expected);
    return report;
}

RegularityReport sample_check_regular(const ExampleMap& map, const std::vector<int>& tuple_sizes,
                                      std::uint64_t trials, std::uint64_t seed) {
#ifdef _OPENMP
    return sample_check_regular_parallel(map, tuple_sizes, trials, seed);
#else
    return sample_check_regular_serial(map, tuple_sizes, trials, seed);
#endif
}

std::size_t image_rank(const ExampleMap& map, const std::vector<SamplePoint>& points) {
    for (const auto& p : points) {
        if (p.block >= map.blocks().size()) throw std::invalid_argument("image_rank: point refers to a missing block");
    }
    return rank_of_tuple(map, points).rank;
}

bool witness_reproduces(const ExampleMap& map, const Witness& witness) {
    return image_rank(map, witness.points) < witness.expected_rank;
}

std::vector<std::vector<mpq_class>> rational_sphere_points(int m, int radius) {
    if (m < 1 || radius < 0) throw std::invalid_argument("rational_sphere_points: need m >= 1 and radius >= 0");
    std::vector<std::vector<mpq_class>> out;
    std::vector<int> u(static_cast<std::size_t>(m), -radius);
    while (true) {
        long norm2 = 0;
        for (int c : u) norm2 += static_cast<long>(c) * c;
        std::vector<mpq_class> x;
        for (int c : u) x.emplace_back(mpq_class(2L * c, norm2 + 1));
        x.emplace_back(mpq_class(norm2 - 1, norm2 + 1));
        for (auto& c : x) c.canonicalize();
        out.push_back(std::move(x));
        std::size_t i = 0;
        while (i < u.size() && u[i] == radius) u[i++] = -radius;
        if (i == u.size()) break;
        ++u[i];
    }
    std::vector<mpq_class> pole(static_cast<std::size_t>(m + 1), 0);
    pole.back() = 1;
    out.push_back(std::move(pole));
    return out;
}

std::optional<Witness> find_sphere_counterexample(int m, int tuple_size, int radius, std::uint64_t max_tuples) {
    if (tuple_size < 1) throw std::invalid_argument("find_sphere_counterexample: tuple size must be >= 1");
    const auto candidates = rational_sphere_points(m, radius);
    const auto n = candidates.size();
    const auto t = static_cast<std::size_t>(tuple_size);
    if (t > n) return std::nullopt;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    for (std::uint64_t count = 0; count < max_tuples; ++count) {
        std::vector<Row> rows;
        for (std::size_t i : idx) {
            Row r{mpq_class(1)};
            r.insert(r.end(), candidates[i].begin(), candidates[i].end());
            rows.push_back(std::move(r));
        }
        const std::size_t rank = exact_rank(rows, static_cast<std::size_t>(m + 2), Domain::rationals());
        if (rank < t) {
            Witness w{count, {}, rank, t};
            for (std::size_t i : idx) w.points.push_back({0, candidates[i]});
            return w;
        }
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
        if (i == 0) return std::nullopt;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace charclass
