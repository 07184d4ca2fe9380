#pragma once

#include <stdexcept>
#include <string>

#include "bv/polynomial.hpp"

namespace bv {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t column)
        : std::runtime_error(msg + " at column " + std::to_string(column)),
          column(column) {}
    std::size_t column;  // 1-based
};

struct PolyExpr {
    std::string source;
    Polynomial parsed;
};

/// Parses the expression grammar:
///   expr   := ('-')? term (('+'|'-') term)*
///   term   := factor (('*')? factor)*      (implicit '*' before 'x' or '(')
///   factor := base ('^' natural)?
///   base   := rational | 'x' | '(' expr ')'
/// Whitespace is insignificant. Exponents above the cap are rejected.
PolyExpr parse_poly(const std::string& source, Nat exponent_cap = 512);

}  // namespace bv
