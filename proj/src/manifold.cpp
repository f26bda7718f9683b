#include "charclass/manifold.hpp"

#include "charclass/field.hpp"

#include <stdexcept>

namespace charclass {

namespace {

const char* family_prefix(Family f) {
    switch (f) {
        case Family::Sphere: return "S";
        case Family::RealProj: return "RP";
        case Family::ComplexProj: return "CP";
        case Family::QuatProj: return "HP";
        case Family::Euclid: return "R";
    }
    return "?";
}

}  // namespace

int Atom::real_dimension() const {
    switch (family) {
        case Family::ComplexProj: return 2 * m;
        case Family::QuatProj: return 4 * m;
        default: return m;
    }
}

std::string Atom::to_string() const { return std::string(family_prefix(family)) + "^" + std::to_string(m); }

ManifoldSpec ManifoldSpec::atom(Family family, int m) {
    const int min_dim = family == Family::Euclid ? 1 : 2;
    if (m < min_dim) {
        throw std::invalid_argument(std::string(family_prefix(family)) + "^" + std::to_string(m) +
                                    ": dimension parameter must be >= " + std::to_string(min_dim));
    }
    return ManifoldSpec({Atom{family, m}});
}

ManifoldSpec ManifoldSpec::sphere(int m) { return atom(Family::Sphere, m); }
ManifoldSpec ManifoldSpec::real_proj(int m) { return atom(Family::RealProj, m); }
ManifoldSpec ManifoldSpec::complex_proj(int m) { return atom(Family::ComplexProj, m); }
ManifoldSpec ManifoldSpec::quat_proj(int m) { return atom(Family::QuatProj, m); }
ManifoldSpec ManifoldSpec::euclid(int m) { return atom(Family::Euclid, m); }

ManifoldSpec ManifoldSpec::product(const std::vector<ManifoldSpec>& factors) {
    if (factors.empty()) throw std::invalid_argument("ManifoldSpec::product: empty product");
    std::vector<Atom> atoms;
    for (const auto& f : factors) atoms.insert(atoms.end(), f.factors_.begin(), f.factors_.end());
    return ManifoldSpec(std::move(atoms));
}

const Atom& ManifoldSpec::single() const {
    if (!is_atom()) throw std::logic_error("ManifoldSpec::single: " + to_string() + " is a product");
    return factors_.front();
}

int ManifoldSpec::real_dimension() const {
    int d = 0;
    for (const auto& a : factors_) d += a.real_dimension();
    return d;
}

bool ManifoldSpec::is_closed() const {
    for (const auto& a : factors_) {
        if (!a.closed()) return false;
    }
    return true;
}

std::string ManifoldSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) s += " x ";
        s += factors_[i].to_string();
    }
    return s;
}

ShapePtr cohomology_shape(const ManifoldSpec& spec) {
    std::vector<Generator> gens;
    const bool tag = spec.factors().size() > 1;
    for (std::size_t i = 0; i < spec.factors().size(); ++i) {
        const Atom& a = spec.factors()[i];
        const std::string suffix = tag ? std::to_string(i + 1) : "";
        switch (a.family) {
            case Family::Sphere: gens.push_back({"s" + suffix, a.m, 1}); break;
            case Family::RealProj: gens.push_back({"a" + suffix, 1, a.m}); break;
            case Family::ComplexProj: gens.push_back({"b" + suffix, 2, a.m}); break;
            case Family::QuatProj: gens.push_back({"d" + suffix, 4, a.m}); break;
            case Family::Euclid: break;  // contractible
        }
    }
    return make_shape(std::move(gens), spec.real_dimension(), Domain::prime(2));
}

GradedSeries total_sw(const ManifoldSpec& spec) {
    const ShapePtr shape = cohomology_shape(spec);
    GradedSeries total = GradedSeries::one(shape);
    std::size_t gen = 0;
    for (const auto& a : spec.factors()) {
        if (a.family == Family::Euclid) continue;
        if (a.family != Family::Sphere) {
            // w = (1 + x)^{m+1} in Z2[x]/(x^{m+1})
            const GradedSeries one_plus = GradedSeries::one(shape) + GradedSeries::generator(shape, gen);
            total = series_mul(total, one_plus.pow(static_cast<unsigned>(a.m + 1)));
        }
        ++gen;
    }
    return total;
}

GradedSeries dual_sw(const ManifoldSpec& spec) { return series_invert(total_sw(spec)); }

DualClassProfile top_dual_degree(const ManifoldSpec& spec) {
    return {spec, dual_sw(spec).top_degree(), DualMethod::BruteForce};
}

int closed_form_q(const Atom& atom) {
    const int m = atom.m;
    switch (atom.family) {
        case Family::Sphere:
        case Family::Euclid: return 0;
        case Family::RealProj: return static_cast<int>(pow2(floor_log2(m) + 1)) - m - 1;
        case Family::ComplexProj: return static_cast<int>(pow2(floor_log2(m) + 2)) - 2 * m - 2;
        case Family::QuatProj: return static_cast<int>(pow2(floor_log2(m) + 3)) - 4 * m - 4;
    }
    throw std::logic_error("closed_form_q: unknown family");
}

DualClassProfile top_dual_degree_closed_form(const ManifoldSpec& spec) {
    int q = 0;
    for (const auto& a : spec.factors()) q += closed_form_q(a);
    return {spec, q, DualMethod::ClosedForm};
}

}  // namespace charclass
