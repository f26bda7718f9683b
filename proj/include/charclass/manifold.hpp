#pragma once

// Spheres, projective spaces, Euclidean spaces and their finite products,
// with their mod-2 total and dual Stiefel-Whitney classes.

#include "charclass/series.hpp"

#include <string>
#include <vector>

namespace charclass {

enum class Family { Sphere, RealProj, ComplexProj, QuatProj, Euclid };

/// One factor of a product, e.g. RP^5.
struct Atom {
    Family family;
    int m;

    int real_dimension() const;
    bool closed() const noexcept { return family != Family::Euclid; }
    std::string to_string() const;
    bool operator==(const Atom&) const = default;
};

/// A finite product of atoms; a single atom is a product of length one.
class ManifoldSpec {
public:
    static ManifoldSpec sphere(int m);
    static ManifoldSpec real_proj(int m);
    static ManifoldSpec complex_proj(int m);
    static ManifoldSpec quat_proj(int m);
    static ManifoldSpec euclid(int m);
    static ManifoldSpec atom(Family family, int m);
    /// Flattens nested products. Throws on an empty list.
    static ManifoldSpec product(const std::vector<ManifoldSpec>& factors);

    const std::vector<Atom>& factors() const noexcept { return factors_; }
    bool is_atom() const noexcept { return factors_.size() == 1; }
    const Atom& single() const;
    int real_dimension() const;
    /// Closed and connected: no Euclidean factor.
    bool is_closed() const;
    /// "S^3 x RP^5".
    std::string to_string() const;

    bool operator==(const ManifoldSpec&) const = default;

private:
    explicit ManifoldSpec(std::vector<Atom> factors) : factors_(std::move(factors)) {}
    std::vector<Atom> factors_;
};

/// Z2 cohomology ring: one nilpotent generator per non-Euclidean factor
/// (sphere s^2 = 0, a^{m+1} = 0 with |a| = 1, |b| = 2, |d| = 4), truncated
/// at the total real dimension.
ShapePtr cohomology_shape(const ManifoldSpec& spec);

GradedSeries total_sw(const ManifoldSpec& spec);
GradedSeries dual_sw(const ManifoldSpec& spec);

enum class DualMethod { BruteForce, ClosedForm };

struct DualClassProfile {
    ManifoldSpec spec;
    /// Largest degree with wbar_q != 0.
    int q;
    DualMethod method;
};

/// q read off the inverted total class.
DualClassProfile top_dual_degree(const ManifoldSpec& spec);
/// q from 2^{j+1}-m-1, 2^{j+2}-2m-2, 2^{j+3}-4m-4 (2^j <= m < 2^{j+1}), 0 for
/// spheres and Euclidean factors, summed over the product.
DualClassProfile top_dual_degree_closed_form(const ManifoldSpec& spec);

int closed_form_q(const Atom& atom);

}  // namespace charclass
