#include "charclass/bundles.hpp"

#include "charclass/field.hpp"

#include <bit>

namespace charclass {

std::string regime_name(Regime r) { return r == Regime::Real ? "real" : "complex"; }

std::string source_name(BundleSource s) {
    switch (s) {
        case BundleSource::ClosedManifold: return "closed manifold: lambda = dim M + q";
        case BundleSource::Plane: return "plane: lambda(R^2, 2^i) = 2^i - 1";
        case BundleSource::ComplexSphere: return "complex sphere: tau = [m/2]";
        case BundleSource::ComplexProjLower: return "complex CP^m: kappa >= 2m - 2";
        case BundleSource::EuclidPrimeLower: return "complex R^m, p odd prime: nu >= [(m-1)/2](p-1)";
    }
    return "unknown";
}

BundleProfile lambda_top(const ManifoldSpec& spec, int k, Regime regime) {
    const auto refuse = [&]() -> NotDeterminedError {
        return NotDeterminedError("(" + spec.to_string() + ", " + std::to_string(k) + ", " + regime_name(regime) +
                                  "): top dual-class degree is not determined by the known lemmas");
    };
    if (k < 2) throw std::invalid_argument("lambda_top: need at least 2 points, got " + std::to_string(k));

    if (regime == Regime::Real) {
        if (spec.is_closed() && k == 2) {
            const int q = top_dual_degree(spec).q;
            return {spec, k, regime, spec.real_dimension() + q, true, BundleSource::ClosedManifold};
        }
        if (spec.is_atom() && spec.single() == Atom{Family::Euclid, 2} &&
            std::has_single_bit(static_cast<unsigned>(k))) {
            return {spec, k, regime, k - 1, true, BundleSource::Plane};
        }
        throw refuse();
    }

    if (!spec.is_atom()) throw refuse();
    const Atom& a = spec.single();
    if (a.family == Family::Sphere && k == 2) {
        return {spec, k, regime, a.m / 2, true, BundleSource::ComplexSphere};
    }
    if (a.family == Family::ComplexProj && k == 2 && a.m >= 4) {
        return {spec, k, regime, 2 * a.m - 2, false, BundleSource::ComplexProjLower};
    }
    if (a.family == Family::Euclid && k > 2 && is_prime(static_cast<std::uint64_t>(k))) {
        return {spec, k, regime, ((a.m - 1) / 2) * (k - 1), false, BundleSource::EuclidPrimeLower};
    }
    throw refuse();
}

}  // namespace charclass
