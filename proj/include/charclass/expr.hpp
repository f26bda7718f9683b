#pragma once

// Manifold and query expressions.
//
//   atom    := "S^" INT | "RP^" INT | "CP^" INT | "HP^" INT | "R^" INT
//   product := atom (" x " atom)*
//   query   := "(" product "," INT ")" ("+" "(" product "," INT ")")*
//
// No other whitespace is accepted.

#include "charclass/bounds.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace charclass {

class ParseError : public std::invalid_argument {
public:
    enum class Kind { Syntax, Semantic };
    ParseError(Kind kind, std::size_t position, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    /// 0-based character offset.
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

/// Largest accepted dimension parameter or point count.
inline constexpr int kMaxExprInteger = 4096;

using Expression = std::variant<ManifoldSpec, RegularQuery>;

/// A product if the text starts with an atom, a query if it starts with "(".
/// Queries come back in the real regime.
Expression parse_manifold_expr(std::string_view text);
ManifoldSpec parse_product(std::string_view text);
RegularQuery parse_query(std::string_view text, Regime regime = Regime::Real);

std::string render(const Expression& e);

}  // namespace charclass
