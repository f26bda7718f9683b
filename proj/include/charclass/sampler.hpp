#pragma once

// Randomized checks of the explicit regular maps: the Vandermonde map on C,
// the (1, i) map on S^m, and block direct sums of these.
//
// Vandermonde tuples have rational coordinates and are ranked exactly. Sphere
// tuples are ranked by SVD with a relative threshold. Each trial draws from its
// own RNG substream, so serial and parallel runs return identical reports.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charclass {

struct GaussianRational {
    mpq_class re;
    mpq_class im;

    bool operator==(const GaussianRational&) const = default;
};

/// Rank of the realified Vandermonde rows
/// (1, Re z, Im z, ..., Re z^{k-1}, Im z^{k-1}) in R^{2k-1}. Exact.
/// Throws invalid_argument on repeated points or k < 1.
std::size_t vandermonde_rank_exact(const std::vector<GaussianRational>& points, int k);

enum class MapKind { Vandermonde, SphereOneI };

/// One leaf map. Vandermonde: C = R^2 -> R^{2k-1}, k-regular.
/// SphereOneI: S^m -> R^{m+2}, x -> (1, x), 3-regular.
struct LeafMap {
    MapKind kind;
    int parameter;

    int ambient_dimension() const;
    int domain_dimension() const;
    int claimed_regularity() const;
    std::string to_string() const;
    bool operator==(const LeafMap&) const = default;
};

/// A direct sum of leaf maps; a single leaf is a one-block sum.
class ExampleMap {
public:
    static ExampleMap vandermonde(int k);
    static ExampleMap sphere_one_i(int m);
    /// Concatenates the blocks of every part.
    static ExampleMap direct_sum(const std::vector<ExampleMap>& parts);

    const std::vector<LeafMap>& blocks() const noexcept { return blocks_; }
    int ambient_dimension() const;
    std::vector<int> claimed_regularity() const;
    std::string to_string() const;

private:
    explicit ExampleMap(std::vector<LeafMap> blocks) : blocks_(std::move(blocks)) {}
    std::vector<LeafMap> blocks_;
};

/// A sampled point, exactly as used in the rank test. Sphere coordinates are the
/// doubles that were sampled, stored exactly.
struct SamplePoint {
    std::size_t block;
    std::vector<mpq_class> coords;
};

struct Witness {
    std::uint64_t trial;
    std::vector<SamplePoint> points;
    std::size_t rank;
    std::size_t expected_rank;
};

struct RegularityReport {
    std::string map;
    int ambient_dimension = 0;
    std::vector<int> tuple_sizes;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    /// Trials whose full rank was certified exactly (Vandermonde-only tuples).
    std::uint64_t exact_certified = 0;
    /// Smallest sigma_min / sigma_max over floating blocks; nullopt without any.
    std::optional<double> min_singular_ratio;
    /// Set when a tuple size exceeds the claimed regularity.
    std::vector<std::string> warnings;
    /// First violation in trial order.
    std::optional<Witness> witness;

    bool violation_expected() const noexcept { return !warnings.empty(); }
    std::string verdict() const { return witness ? "counterexample" : "no-violation-found"; }
};

inline constexpr double kRelativeRankTolerance = 1e-8;
inline constexpr double kMinSeparation = 1e-3;
/// Vandermonde coordinates are drawn from (1/kGridDenominator) Z in [-1, 1].
inline constexpr int kGridDenominator = 1000;

RegularityReport sample_check_regular_serial(const ExampleMap& map, const std::vector<int>& tuple_sizes,
                                             std::uint64_t trials, std::uint64_t seed);
RegularityReport sample_check_regular_parallel(const ExampleMap& map, const std::vector<int>& tuple_sizes,
                                               std::uint64_t trials, std::uint64_t seed);
/// Parallel when OpenMP is available.
RegularityReport sample_check_regular(const ExampleMap& map, const std::vector<int>& tuple_sizes,
                                      std::uint64_t trials, std::uint64_t seed);

/// Rank of the image matrix of a tuple, block by block. Exact for Vandermonde
/// blocks, SVD for sphere blocks.
std::size_t image_rank(const ExampleMap& map, const std::vector<SamplePoint>& points);

/// Re-evaluates a witness; true when the rank is still deficient.
bool witness_reproduces(const ExampleMap& map, const Witness& witness);

/// Rational points of S^m (inverse stereographic images of grid points with
/// coordinates in [-radius, radius], plus the north pole), in a fixed order.
std::vector<std::vector<mpq_class>> rational_sphere_points(int m, int radius);

/// Searches tuples of `tuple_size` distinct rational sphere points, in
/// lexicographic order of candidate indices, for one whose vectors (1, x) are
/// linearly dependent. Rank is exact. Gives up after `max_tuples` tuples.
std::optional<Witness> find_sphere_counterexample(int m, int tuple_size, int radius = 1,
                                                  std::uint64_t max_tuples = 1'000'000);

}  // namespace charclass
