#pragma once

// Truncated graded polynomial rings over Z/p or Q.
//
// A series lives in a SeriesShape: an ordered list of weighted generators, a
// maximum weighted total degree, and a coefficient domain. Generators may be
// nilpotent (x^(cap+1) = 0), which models H*(RP^m) = Z2[a]/(a^(m+1)) and its
// relatives. Operations on series with different shapes throw
// StructuralError; nothing is ever silently re-truncated.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charclass {

struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotInvertibleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Z/p when modulus is a prime, Q when modulus == 0.
class Domain {
public:
    static Domain rationals() { return Domain{0}; }
    static Domain prime(std::uint64_t p);

    bool is_rational() const noexcept { return modulus_ == 0; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    /// Canonical representative: residue in [0, p) for Z/p, reduced fraction for Q.
    mpq_class normalize(const mpq_class& x) const;
    mpq_class inverse(const mpq_class& x) const;

    std::string name() const;
    bool operator==(const Domain&) const = default;

private:
    explicit Domain(std::uint64_t m) : modulus_(m) {}
    std::uint64_t modulus_;
};

struct Generator {
    std::string name;
    int degree = 1;
    /// Largest surviving exponent; nullopt for a free generator.
    std::optional<int> max_exponent;

    bool operator==(const Generator&) const = default;
};

using Exponent = std::vector<int>;

struct SeriesShape {
    std::vector<Generator> generators;
    int truncation = 0;
    Domain domain = Domain::rationals();

    int weighted_degree(const Exponent& e) const;
    /// False when some exponent exceeds its generator's nilpotency cap.
    bool survives(const Exponent& e) const;
    bool operator==(const SeriesShape&) const = default;
};

using ShapePtr = std::shared_ptr<const SeriesShape>;

ShapePtr make_shape(std::vector<Generator> generators, int truncation, Domain domain);

class GradedSeries {
public:
    using Terms = std::map<Exponent, mpq_class>;

    /// The zero series.
    explicit GradedSeries(ShapePtr shape);

    static GradedSeries one(ShapePtr shape);
    static GradedSeries constant(ShapePtr shape, const mpq_class& c);
    static GradedSeries generator(ShapePtr shape, std::size_t index);
    static GradedSeries monomial(ShapePtr shape, Exponent e, const mpq_class& c = 1);

    const SeriesShape& shape() const noexcept { return *shape_; }
    const ShapePtr& shape_ptr() const noexcept { return shape_; }
    const Terms& terms() const noexcept { return terms_; }

    mpq_class coefficient(const Exponent& e) const;
    mpq_class constant_term() const;
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest weighted degree carrying a nonzero term, or -1 for zero.
    int top_degree() const;
    /// Smallest weighted degree carrying a nonzero term, or -1 for zero.
    int low_degree() const;
    GradedSeries homogeneous_part(int degree) const;

    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries operator-() const;
    GradedSeries scaled(const mpq_class& c) const;
    GradedSeries pow(unsigned e) const;

    /// Same series re-read in another coefficient domain (e.g. integral -> mod 2).
    /// Requires every coefficient to be representable there.
    GradedSeries reduced_to(ShapePtr target) const;

    /// ASCII rendering, lowest degree first: "1 + a^2 + a^4".
    std::string to_string() const;

    bool operator==(const GradedSeries& o) const;

private:
    friend GradedSeries series_mul(const GradedSeries&, const GradedSeries&);
    friend GradedSeries series_invert(const GradedSeries&);
    void add_term(const Exponent& e, const mpq_class& c);
    void require_same_shape(const GradedSeries& o, const char* op) const;

    ShapePtr shape_;
    Terms terms_;
};

/// Coefficient-wise convolution; terms above the truncation or past a
/// generator's nilpotency cap are discarded.
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);

/// Multiplicative inverse up to the truncation, computed degree by degree.
/// Requires constant term 1.
GradedSeries series_invert(const GradedSeries& s);

}  // namespace charclass
