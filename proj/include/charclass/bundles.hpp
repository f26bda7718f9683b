#pragma once

// Top nonvanishing dual-class degrees of the configuration-space bundles
// xi_{M,k} (real) and xi^C_{M,k} (complex). Values come from the known lemma
// table; q is delegated to the manifold module. Anything the table does not
// cover is refused rather than guessed.

#include "charclass/manifold.hpp"

#include <stdexcept>
#include <string>

namespace charclass {

enum class Regime { Real, Complex };

std::string regime_name(Regime r);

struct NotDeterminedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class BundleSource {
    ClosedManifold,   ///< lambda = dim M + q for closed connected M, k = 2
    Plane,            ///< lambda(R^2, 2^i) = 2^i - 1
    ComplexSphere,    ///< tau(S^m, 2) = [m/2]
    ComplexProjLower, ///< kappa(CP^m, 2) >= 2m - 2, m >= 4
    EuclidPrimeLower, ///< nu(R^m, p) >= [(m-1)/2](p-1), p odd prime
};

std::string source_name(BundleSource s);

struct BundleProfile {
    ManifoldSpec spec;
    int points;
    Regime regime;
    /// lambda, tau, or a lower bound on kappa / nu when !exact.
    int top_degree;
    bool exact;
    BundleSource source;
};

BundleProfile lambda_top(const ManifoldSpec& spec, int k, Regime regime);

}  // namespace charclass
