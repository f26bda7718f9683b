#include "charclass/series.hpp"

#include "charclass/field.hpp"

#include <algorithm>
#include <sstream>

namespace charclass {

Domain Domain::prime(std::uint64_t p) {
    if (p > (std::uint64_t{1} << 62)) throw std::invalid_argument("Domain::prime: modulus too large");
    require_prime(p, "Domain::prime");
    return Domain{p};
}

mpq_class Domain::normalize(const mpq_class& x) const {
    if (is_rational()) {
        mpq_class r = x;
        r.canonicalize();
        return r;
    }
    mpz_class p = static_cast<unsigned long>(modulus_);
    mpz_class num = x.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = x.get_den() % p;
    if (den == 0) throw std::domain_error("Domain::normalize: denominator divisible by " + name());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    return mpq_class(r);
}

mpq_class Domain::inverse(const mpq_class& x) const {
    if (sgn(x) == 0) throw std::domain_error("Domain::inverse: zero is not invertible");
    if (is_rational()) return 1 / x;
    return normalize(mpq_class(1) / x);
}

std::string Domain::name() const {
    return is_rational() ? std::string("Q") : "Z/" + std::to_string(modulus_);
}

int SeriesShape::weighted_degree(const Exponent& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * generators[i].degree;
    return d;
}

bool SeriesShape::survives(const Exponent& e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (generators[i].max_exponent && e[i] > *generators[i].max_exponent) return false;
    }
    return true;
}

ShapePtr make_shape(std::vector<Generator> generators, int truncation, Domain domain) {
    if (truncation < 0) throw std::invalid_argument("make_shape: negative truncation");
    for (const auto& g : generators) {
        if (g.degree <= 0) throw std::invalid_argument("make_shape: generator '" + g.name + "' needs positive degree");
        if (g.max_exponent && *g.max_exponent < 0) {
            throw std::invalid_argument("make_shape: negative nilpotency cap on '" + g.name + "'");
        }
    }
    return std::make_shared<const SeriesShape>(SeriesShape{std::move(generators), truncation, domain});
}

GradedSeries::GradedSeries(ShapePtr shape) : shape_(std::move(shape)) {
    if (!shape_) throw std::invalid_argument("GradedSeries: null shape");
}

GradedSeries GradedSeries::one(ShapePtr shape) { return constant(std::move(shape), 1); }

GradedSeries GradedSeries::constant(ShapePtr shape, const mpq_class& c) {
    Exponent zero(shape->generators.size(), 0);
    return monomial(std::move(shape), std::move(zero), c);
}

GradedSeries GradedSeries::generator(ShapePtr shape, std::size_t index) {
    if (index >= shape->generators.size()) throw std::out_of_range("GradedSeries::generator: bad index");
    Exponent e(shape->generators.size(), 0);
    e[index] = 1;
    return monomial(std::move(shape), std::move(e), 1);
}

GradedSeries GradedSeries::monomial(ShapePtr shape, Exponent e, const mpq_class& c) {
    GradedSeries s(std::move(shape));
    if (e.size() != s.shape_->generators.size()) {
        throw StructuralError("GradedSeries::monomial: exponent length does not match generator count");
    }
    for (int x : e) {
        if (x < 0) throw std::invalid_argument("GradedSeries::monomial: negative exponent");
    }
    if (s.shape_->survives(e) && s.shape_->weighted_degree(e) <= s.shape_->truncation) s.add_term(e, c);
    return s;
}

void GradedSeries::add_term(const Exponent& e, const mpq_class& c) {
    auto it = terms_.find(e);
    mpq_class v = shape_->domain.normalize(it == terms_.end() ? c : it->second + c);
    if (sgn(v) == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(e, std::move(v));
    } else {
        it->second = std::move(v);
    }
}

void GradedSeries::require_same_shape(const GradedSeries& o, const char* op) const {
    if (shape_ != o.shape_ && !(*shape_ == *o.shape_)) {
        throw StructuralError(std::string(op) + ": operands have different generators, truncation or domain");
    }
}

mpq_class GradedSeries::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class GradedSeries::constant_term() const {
    return coefficient(Exponent(shape_->generators.size(), 0));
}

int GradedSeries::top_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, shape_->weighted_degree(e));
    return d;
}

int GradedSeries::low_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int w = shape_->weighted_degree(e);
        if (d < 0 || w < d) d = w;
    }
    return d;
}

GradedSeries GradedSeries::homogeneous_part(int degree) const {
    GradedSeries r(shape_);
    for (const auto& [e, c] : terms_) {
        if (shape_->weighted_degree(e) == degree) r.terms_.emplace(e, c);
    }
    return r;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
    require_same_shape(o, "series add");
    GradedSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
    require_same_shape(o, "series subtract");
    GradedSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

GradedSeries GradedSeries::operator-() const { return scaled(-1); }

GradedSeries GradedSeries::scaled(const mpq_class& c) const {
    GradedSeries r(shape_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

GradedSeries GradedSeries::pow(unsigned e) const {
    GradedSeries result = one(shape_);
    GradedSeries base = *this;
    while (e > 0) {
        if (e & 1u) result = series_mul(result, base);
        e >>= 1;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

GradedSeries GradedSeries::reduced_to(ShapePtr target) const {
    if (target->generators != shape_->generators) {
        throw StructuralError("reduced_to: generator lists differ");
    }
    GradedSeries r(std::move(target));
    for (const auto& [e, c] : terms_) {
        if (r.shape_->survives(e) && r.shape_->weighted_degree(e) <= r.shape_->truncation) r.add_term(e, c);
    }
    return r;
}

std::string GradedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<const Exponent*, const mpq_class*>> order;
    for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
    std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
        int dx = shape_->weighted_degree(*x.first), dy = shape_->weighted_degree(*y.first);
        if (dx != dy) return dx < dy;
        return *x.first > *y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : order) {
        mpq_class coeff = *c;
        bool negative = shape_->domain.is_rational() && sgn(coeff) < 0;
        if (negative) coeff = -coeff;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e->size(); ++i) {
            if ((*e)[i] == 0) continue;
            if (any) mono << "*";
            mono << shape_->generators[i].name;
            if ((*e)[i] > 1) mono << "^" << (*e)[i];
            any = true;
        }
        if (!any) {
            os << coeff.get_str();
        } else {
            if (coeff != 1) os << coeff.get_str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

bool GradedSeries::operator==(const GradedSeries& o) const {
    return *shape_ == *o.shape_ && terms_ == o.terms_;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
    a.require_same_shape(b, "series_mul");
    const SeriesShape& shape = *a.shape_;
    GradedSeries r(a.shape_);
    Exponent e(shape.generators.size());
    for (const auto& [ea, ca] : a.terms_) {
        int da = shape.weighted_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + shape.weighted_degree(eb) > shape.truncation) continue;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (!shape.survives(e)) continue;
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

GradedSeries series_invert(const GradedSeries& s) {
    const SeriesShape& shape = s.shape();
    if (s.constant_term() != 1) {
        throw NotInvertibleError("series_invert: constant term is " + s.constant_term().get_str() + ", expected 1");
    }
    const int top = shape.truncation;
    std::vector<GradedSeries> parts(top + 1, GradedSeries(s.shape_ptr()));
    for (const auto& [e, c] : s.terms()) parts[shape.weighted_degree(e)].terms_.emplace(e, c);

    // t_0 = 1, t_d = -sum_{j=1..d} s_j t_{d-j}; each product is homogeneous of degree d.
    std::vector<GradedSeries> inv(top + 1, GradedSeries(s.shape_ptr()));
    inv[0] = GradedSeries::one(s.shape_ptr());
    for (int d = 1; d <= top; ++d) {
        GradedSeries acc(s.shape_ptr());
        for (int j = 1; j <= d; ++j) {
            if (parts[j].is_zero() || inv[d - j].is_zero()) continue;
            acc = acc + series_mul(parts[j], inv[d - j]);
        }
        inv[d] = -acc;
    }
    GradedSeries result(s.shape_ptr());
    for (int d = 0; d <= top; ++d) {
        for (const auto& [e, c] : inv[d].terms_) result.terms_.emplace(e, c);
    }
    return result;
}

}  // namespace charclass
