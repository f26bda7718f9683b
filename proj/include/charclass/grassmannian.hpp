#pragma once

// Cohomology of Grassmannians as truncated quotient rings.
//
//   H*(G_k(R^{n+1}); Z2) = Z2[w_1..w_k] / (wbar_{n-k+2}, ..., wbar_{n+1}),  |w_i| = i
//   H*(G_k(C^{n+1}); Z)  = Z[c_1..c_k]  / (cbar_{n-k+2}, ..., cbar_{n+1}),  |c_i| = 2i
//
// where wbar / cbar are the homogeneous parts of (1 + w_1 + ... + w_k)^{-1}.
// The integral ring is torsion-free, so nonvanishing is decided over Q. Each
// graded piece is reduced once, eagerly, at construction; a presentation is
// immutable afterwards and may be shared across threads.

#include "charclass/linalg.hpp"
#include "charclass/series.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charclass {

/// Raised when the configured truncation cannot certify a vanishing.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ClassFamily {
    StiefelWhitney,  ///< real Grassmannian, |w_i| = i
    Chern,           ///< complex Grassmannian, |c_i| = 2i
};

class GrassmannPresentation;

/// Coordinates of an element against the standard monomials of each degree.
class QuotientElement {
public:
    QuotientElement(const GrassmannPresentation& pres, std::map<int, Row> coords);

    const GrassmannPresentation& presentation() const noexcept { return *pres_; }
    /// Nonzero coordinate rows keyed by weighted degree.
    const std::map<int, Row>& coordinates() const noexcept { return coords_; }
    bool is_zero() const noexcept { return coords_.empty(); }
    /// The standard-monomial polynomial with these coordinates.
    GradedSeries representative() const;
    std::string to_string() const;

    bool operator==(const QuotientElement& o) const;

private:
    const GrassmannPresentation* pres_;
    std::map<int, Row> coords_;
};

class GrassmannPresentation {
public:
    /// truncation defaults to one unit past (height of the first class + 1),
    /// i.e. unit * (k(n+1-k) + 1).
    GrassmannPresentation(int k, int n, ClassFamily family, Domain domain,
                          std::optional<int> truncation = std::nullopt);

    static GrassmannPresentation stiefel_whitney(int k, int n, std::optional<int> truncation = std::nullopt);
    static GrassmannPresentation chern(int k, int n, std::optional<int> truncation = std::nullopt);

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    ClassFamily family() const noexcept { return family_; }
    const Domain& domain() const noexcept { return ring_->domain; }
    int truncation() const noexcept { return ring_->truncation; }
    /// Degree of the first generator: 1 for w, 2 for c.
    int unit_degree() const noexcept { return family_ == ClassFamily::Chern ? 2 : 1; }
    /// Real dimension of the Grassmannian, the top nonzero degree.
    int top_degree() const noexcept { return unit_degree() * k_ * (n_ + 1 - k_); }

    /// The free polynomial ring Z[c_1..c_k] (or Z2[w..]) truncated at truncation().
    const ShapePtr& ring() const noexcept { return ring_; }
    /// c_i or w_i, 1-based.
    GradedSeries generator(int i) const;
    /// Index of a generator name such as "c1" or "w2"; nullopt if unknown.
    std::optional<int> generator_index(const std::string& name) const;

    /// wbar_{n-k+2..n+1} (resp. cbar), read off the inverse of the total class.
    const std::vector<GradedSeries>& relation_generators() const noexcept { return relations_; }
    /// Standard monomials spanning the degree-d piece of the quotient.
    std::vector<Exponent> quotient_basis(int degree) const;
    /// Sum of quotient_basis sizes over all degrees <= truncation.
    std::size_t total_rank() const;

    QuotientElement normal_form(const GradedSeries& e) const;

    /// "G_2(C^6)" style label.
    std::string label() const;

private:
    friend class QuotientElement;

    struct DegreePiece {
        std::vector<Exponent> monomials;  // column order: descending lex
        Echelon ideal;
        std::vector<std::size_t> basis_columns;
    };

    void build_pieces();

    int k_;
    int n_;
    ClassFamily family_;
    ShapePtr ring_;
    std::vector<GradedSeries> relations_;
    std::vector<DegreePiece> pieces_;
};

/// wbar_{n-k+2..n+1} or cbar_{..} for the presentation's ring.
std::vector<GradedSeries> relation_generators(const GrassmannPresentation& pres);

/// Height of a ring element: the largest t with e^t != 0, or infinite.
struct Height {
    bool infinite = false;
    int value = 0;

    bool operator==(const Height&) const = default;
};

/// Throws InconclusiveError if e^{t+1} cannot be shown to vanish: either its
/// degree stays within the truncation or the truncation reaches top_degree().
Height height(const GrassmannPresentation& pres, const GradedSeries& e);

/// Element x + y*u of H*(F(CP^m,2)/S_2; Z) presented over H*(G_2(C^{m+1})):
/// x integral (checked over Q), y mod 2 because 2u = 0. Both parts are kept as
/// polynomial representatives in c_1, c_2.
struct YasuiElement {
    GradedSeries free_part;
    GradedSeries u_part;
};

class YasuiModule {
public:
    /// Module over G_2(C^{m+1}); truncation defaults to 4m, enough to see
    /// every power of a degree-2 class vanish.
    explicit YasuiModule(int m, std::optional<int> truncation = std::nullopt);

    int m() const noexcept { return m_; }
    const GrassmannPresentation& integral() const noexcept { return integral_; }
    const GrassmannPresentation& mod2() const noexcept { return mod2_; }

    YasuiElement one() const;
    YasuiElement u() const;
    YasuiElement c1() const;
    YasuiElement make(const GradedSeries& free_part, const GradedSeries& u_part) const;
    /// a*u + b*c_1.
    YasuiElement linear(long a, long b) const;

    /// (x1 + y1 u)(x2 + y2 u) = x1 x2 + (x1 y2 + x2 y1 + y1 y2 c_1) u.
    YasuiElement multiply(const YasuiElement& x, const YasuiElement& y) const;
    YasuiElement negate(const YasuiElement& x) const;
    bool is_zero(const YasuiElement& x) const;
    /// Largest weighted degree the module can certify.
    int truncation() const noexcept { return integral_.truncation(); }

private:
    int m_;
    GrassmannPresentation integral_;
    GrassmannPresentation mod2_;
};

/// Largest t with cbar_t = (-1)^t (a u + b c_1)^t nonzero in the module over
/// G_2(C^{m+1}). Requires m >= 4 and a u + b c_1 != 0 (so not b = 0 with a even).
int kappa_case(int m, long a, long b);

}  // namespace charclass
