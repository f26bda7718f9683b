#include "charclass/grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace charclass {

namespace {

// Exponent vectors of weighted degree `degree` for generators of degree unit*i.
std::vector<Exponent> monomials_of_degree(int k, int unit, int degree) {
    std::vector<Exponent> out;
    if (degree % unit != 0) return out;
    Exponent e(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == 0) {
            if (remaining == 0) out.push_back(e);
            return;
        }
        // generator index i (1-based) has reduced degree i
        for (int x = remaining / i; x >= 0; --x) {
            e[static_cast<std::size_t>(i - 1)] = x;
            rec(i - 1, remaining - x * i);
        }
        e[static_cast<std::size_t>(i - 1)] = 0;
    };
    rec(k, degree / unit);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::size_t column_of(const std::vector<Exponent>& monomials, const Exponent& e) {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), e, std::greater<>());
    if (it == monomials.end() || *it != e) throw std::logic_error("normal form: monomial not in its degree piece");
    return static_cast<std::size_t>(it - monomials.begin());
}

}  // namespace

QuotientElement::QuotientElement(const GrassmannPresentation& pres, std::map<int, Row> coords)
    : pres_(&pres), coords_(std::move(coords)) {}

GradedSeries QuotientElement::representative() const {
    GradedSeries r(pres_->ring());
    for (const auto& [degree, row] : coords_) {
        const auto basis = pres_->quotient_basis(degree);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (sgn(row[i]) != 0) r = r + GradedSeries::monomial(pres_->ring(), basis[i], row[i]);
        }
    }
    return r;
}

std::string QuotientElement::to_string() const { return representative().to_string(); }

bool QuotientElement::operator==(const QuotientElement& o) const {
    return pres_ == o.pres_ && coords_ == o.coords_;
}

GrassmannPresentation::GrassmannPresentation(int k, int n, ClassFamily family, Domain domain,
                                             std::optional<int> truncation)
    : k_(k), n_(n), family_(family) {
    if (k < 1 || n < k) {
        throw std::invalid_argument("GrassmannPresentation: need n >= k >= 1, got k=" + std::to_string(k) +
                                    " n=" + std::to_string(n));
    }
    const int unit = unit_degree();
    const int trunc = truncation.value_or(unit * (k * (n + 1 - k) + 1));
    if (trunc < unit * (n + 1)) {
        throw std::invalid_argument("GrassmannPresentation: truncation " + std::to_string(trunc) +
                                    " below degree of the last relation " + std::to_string(unit * (n + 1)));
    }
    const char* prefix = family == ClassFamily::Chern ? "c" : "w";
    std::vector<Generator> gens;
    for (int i = 1; i <= k; ++i) gens.push_back(Generator{prefix + std::to_string(i), unit * i, std::nullopt});
    ring_ = make_shape(std::move(gens), trunc, domain);

    GradedSeries total = GradedSeries::one(ring_);
    for (int i = 1; i <= k; ++i) total = total + generator(i);
    const GradedSeries dual = series_invert(total);
    for (int j = n - k + 2; j <= n + 1; ++j) relations_.push_back(dual.homogeneous_part(unit * j));
    build_pieces();
}

GrassmannPresentation GrassmannPresentation::stiefel_whitney(int k, int n, std::optional<int> truncation) {
    return GrassmannPresentation(k, n, ClassFamily::StiefelWhitney, Domain::prime(2), truncation);
}

GrassmannPresentation GrassmannPresentation::chern(int k, int n, std::optional<int> truncation) {
    return GrassmannPresentation(k, n, ClassFamily::Chern, Domain::rationals(), truncation);
}

GradedSeries GrassmannPresentation::generator(int i) const {
    if (i < 1 || i > k_) throw std::out_of_range("GrassmannPresentation::generator: index out of range");
    return GradedSeries::generator(ring_, static_cast<std::size_t>(i - 1));
}

std::optional<int> GrassmannPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < ring_->generators.size(); ++i) {
        if (ring_->generators[i].name == name) return static_cast<int>(i) + 1;
    }
    return std::nullopt;
}

void GrassmannPresentation::build_pieces() {
    const int unit = unit_degree();
    const int trunc = truncation();
    std::vector<std::vector<Exponent>> by_degree(static_cast<std::size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d) by_degree[static_cast<std::size_t>(d)] = monomials_of_degree(k_, unit, d);

    pieces_.resize(static_cast<std::size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d) {
        DegreePiece& piece = pieces_[static_cast<std::size_t>(d)];
        piece.monomials = by_degree[static_cast<std::size_t>(d)];
        const std::size_t cols = piece.monomials.size();
        std::vector<Row> rows;
        for (std::size_t r = 0; r < relations_.size(); ++r) {
            const int rel_degree = unit * (n_ - k_ + 2 + static_cast<int>(r));
            if (rel_degree > d) continue;
            for (const auto& mono : by_degree[static_cast<std::size_t>(d - rel_degree)]) {
                GradedSeries prod = series_mul(GradedSeries::monomial(ring_, mono), relations_[r]);
                Row row(cols);
                for (const auto& [e, c] : prod.terms()) row[column_of(piece.monomials, e)] = c;
                rows.push_back(std::move(row));
            }
        }
        piece.ideal = row_reduce(std::move(rows), cols, domain());
        for (std::size_t c = 0; c < cols; ++c) {
            if (!piece.ideal.is_pivot(c)) piece.basis_columns.push_back(c);
        }
    }
}

std::vector<Exponent> GrassmannPresentation::quotient_basis(int degree) const {
    if (degree < 0 || degree > truncation()) {
        throw std::out_of_range("quotient_basis: degree " + std::to_string(degree) + " outside [0, " +
                                std::to_string(truncation()) + "]");
    }
    const DegreePiece& piece = pieces_[static_cast<std::size_t>(degree)];
    std::vector<Exponent> basis;
    for (auto c : piece.basis_columns) basis.push_back(piece.monomials[c]);
    return basis;
}

std::size_t GrassmannPresentation::total_rank() const {
    std::size_t total = 0;
    for (const auto& p : pieces_) total += p.basis_columns.size();
    return total;
}

QuotientElement GrassmannPresentation::normal_form(const GradedSeries& e) const {
    if (!(e.shape() == *ring_)) throw StructuralError("normal_form: element is not in this presentation's ring");
    std::map<int, Row> raw;
    for (const auto& [exp, c] : e.terms()) {
        const int d = ring_->weighted_degree(exp);
        const DegreePiece& piece = pieces_[static_cast<std::size_t>(d)];
        auto [it, inserted] = raw.try_emplace(d, Row(piece.monomials.size()));
        it->second[column_of(piece.monomials, exp)] = c;
    }
    std::map<int, Row> coords;
    for (auto& [d, v] : raw) {
        const DegreePiece& piece = pieces_[static_cast<std::size_t>(d)];
        Row reduced = piece.ideal.reduce(std::move(v), domain());
        Row out;
        bool nonzero = false;
        for (auto c : piece.basis_columns) {
            nonzero = nonzero || sgn(reduced[c]) != 0;
            out.push_back(reduced[c]);
        }
        if (nonzero) coords.emplace(d, std::move(out));
    }
    return QuotientElement(*this, std::move(coords));
}

std::string GrassmannPresentation::label() const {
    std::ostringstream os;
    os << "G_" << k_ << "(" << (family_ == ClassFamily::Chern ? "C" : "R") << "^" << (n_ + 1) << ")";
    if (!(domain() == Domain::rationals()) && family_ == ClassFamily::Chern) os << " mod " << domain().modulus();
    return os.str();
}

std::vector<GradedSeries> relation_generators(const GrassmannPresentation& pres) {
    return pres.relation_generators();
}

Height height(const GrassmannPresentation& pres, const GradedSeries& e) {
    if (!(e.shape() == *pres.ring())) throw StructuralError("height: element is not in this presentation's ring");
    if (sgn(e.constant_term()) != 0) return Height{true, 0};
    if (e.is_zero()) return Height{false, 0};
    const int max_degree = e.top_degree();
    GradedSeries power = e;
    for (int t = 1;; ++t) {
        if (!pres.normal_form(power).is_zero()) {
            power = series_mul(power, e);
            continue;
        }
        // Dropped terms sit above the truncation; they are zero once the
        // truncation reaches the top degree of the Grassmannian.
        if (t * max_degree <= pres.truncation() || pres.truncation() >= pres.top_degree()) {
            return Height{false, t - 1};
        }
        throw InconclusiveError("height: truncation " + std::to_string(pres.truncation()) +
                                " cannot certify that power " + std::to_string(t) + " vanishes (needs degree " +
                                std::to_string(t * max_degree) + ")");
    }
}

YasuiModule::YasuiModule(int m, std::optional<int> truncation)
    : m_(m),
      integral_(GrassmannPresentation::chern(2, m, truncation.value_or(4 * m))),
      mod2_(2, m, ClassFamily::Chern, Domain::prime(2), truncation.value_or(4 * m)) {}

YasuiElement YasuiModule::make(const GradedSeries& free_part, const GradedSeries& u_part) const {
    if (!(free_part.shape() == *integral_.ring()) || !(u_part.shape() == *mod2_.ring())) {
        throw StructuralError("YasuiModule::make: parts belong to the wrong rings");
    }
    return YasuiElement{free_part, u_part};
}

YasuiElement YasuiModule::one() const {
    return {GradedSeries::one(integral_.ring()), GradedSeries(mod2_.ring())};
}

YasuiElement YasuiModule::u() const {
    return {GradedSeries(integral_.ring()), GradedSeries::one(mod2_.ring())};
}

YasuiElement YasuiModule::c1() const {
    return {integral_.generator(1), GradedSeries(mod2_.ring())};
}

YasuiElement YasuiModule::linear(long a, long b) const {
    return {integral_.generator(1).scaled(b), GradedSeries::constant(mod2_.ring(), a)};
}

YasuiElement YasuiModule::multiply(const YasuiElement& x, const YasuiElement& y) const {
    const GradedSeries x_mod2 = x.free_part.reduced_to(mod2_.ring());
    const GradedSeries y_mod2 = y.free_part.reduced_to(mod2_.ring());
    const GradedSeries c1_mod2 = mod2_.generator(1);
    GradedSeries free_part = series_mul(x.free_part, y.free_part);
    GradedSeries u_part = series_mul(x_mod2, y.u_part) + series_mul(y_mod2, x.u_part) +
                          series_mul(series_mul(x.u_part, y.u_part), c1_mod2);
    return {std::move(free_part), std::move(u_part)};
}

YasuiElement YasuiModule::negate(const YasuiElement& x) const { return {-x.free_part, -x.u_part}; }

bool YasuiModule::is_zero(const YasuiElement& x) const {
    return integral_.normal_form(x.free_part).is_zero() && mod2_.normal_form(x.u_part).is_zero();
}

int kappa_case(int m, long a, long b) {
    if (m < 4) throw std::invalid_argument("kappa_case: requires m >= 4");
    if (b == 0 && a % 2 == 0) {
        throw std::invalid_argument("kappa_case: a*u + b*c1 vanishes (b = 0 and a even, with 2u = 0)");
    }
    const YasuiModule module(m);
    const YasuiElement step = module.negate(module.linear(a, b));
    YasuiElement dual = step;  // cbar_t = (-(a u + b c1))^t
    for (int t = 1;; ++t) {
        // free part sits in degree 2t, the u coefficient in degree 2t - 2
        if (2 * t > module.truncation()) {
            throw InconclusiveError("kappa_case: truncation " + std::to_string(module.truncation()) +
                                    " exhausted at t = " + std::to_string(t));
        }
        if (module.is_zero(dual)) return t - 1;
        dual = module.multiply(dual, step);
    }
}

}  // namespace charclass
