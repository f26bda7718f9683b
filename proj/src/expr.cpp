#include "charclass/expr.hpp"

#include <cctype>

namespace charclass {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::invalid_argument((kind == Kind::Syntax ? "syntax error at position " : "invalid expression at position ") +
                            std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression expression() {
        if (peek() == '(') return query(Regime::Real);
        return product_to_end();
    }

    ManifoldSpec product_to_end() {
        ManifoldSpec spec = product();
        end();
        return spec;
    }

    RegularQuery query(Regime regime) {
        RegularQuery q;
        q.regime = regime;
        do {
            expect('(');
            ManifoldSpec spec = product();
            expect(',');
            const std::size_t at = pos_;
            const int k = integer();
            if (k < 2) semantic(at, "point count must be >= 2, got " + std::to_string(k));
            expect(')');
            q.pieces.push_back({std::move(spec), k});
        } while (accept('+'));
        end();
        return q;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept(std::string_view s) {
        if (text_.substr(pos_, s.size()) == s) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void syntax(const std::string& what) const {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(ParseError::Kind::Syntax, pos_, "expected " + what + ", found " + found);
    }

    [[noreturn]] static void semantic(std::size_t at, const std::string& what) {
        throw ParseError(ParseError::Kind::Semantic, at, what);
    }

    void expect(char c) {
        if (!accept(c)) syntax("'" + std::string(1, c) + "'");
    }

    void end() {
        if (pos_ != text_.size()) syntax("end of input");
    }

    int integer() {
        const std::size_t start = pos_;
        if (peek() == '0' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            syntax("an integer without leading zeros");
        }
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxExprInteger) semantic(start, "integer exceeds " + std::to_string(kMaxExprInteger));
            ++pos_;
        }
        if (pos_ == start) syntax("an integer");
        return static_cast<int>(value);
    }

    ManifoldSpec atom() {
        const std::size_t start = pos_;
        Family family;
        if (accept("RP^")) {
            family = Family::RealProj;
        } else if (accept("CP^")) {
            family = Family::ComplexProj;
        } else if (accept("HP^")) {
            family = Family::QuatProj;
        } else if (accept("S^")) {
            family = Family::Sphere;
        } else if (accept("R^")) {
            family = Family::Euclid;
        } else {
            syntax("one of S^, RP^, CP^, HP^, R^");
        }
        const int m = integer();
        try {
            return ManifoldSpec::atom(family, m);
        } catch (const std::invalid_argument& e) {
            semantic(start, e.what());
        }
    }

    ManifoldSpec product() {
        std::vector<ManifoldSpec> factors{atom()};
        while (accept(" x ")) factors.push_back(atom());
        return ManifoldSpec::product(factors);
    }
};

}  // namespace

Expression parse_manifold_expr(std::string_view text) { return Parser(text).expression(); }

ManifoldSpec parse_product(std::string_view text) { return Parser(text).product_to_end(); }

RegularQuery parse_query(std::string_view text, Regime regime) { return Parser(text).query(regime); }

std::string render(const Expression& e) {
    return std::visit([](const auto& x) { return x.to_string(); }, e);
}

}  // namespace charclass
