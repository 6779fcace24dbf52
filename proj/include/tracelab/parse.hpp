#pragma once

#include <string>
#include <vector>

#include "tracelab/artinian.hpp"

namespace tracelab {

/// Parse a polynomial expression into an algebra element in normal form.
/// Grammar: integer coefficients, variable names, `*`, `+`, `-`, `^k`,
/// parentheses.  Multiplication is always explicit.  Errors carry the
/// 1-based position of the offending token.
std::vector<i64> parse_poly(const std::string& expr, const ArtinianAlgebra& A);

/// Parse a pure monomial (variables joined by `*`, each with an optional
/// `^k`) into an exponent vector over the given variable list.  Used for
/// relation lists, before any algebra exists.
Monomial parse_monomial(const std::string& expr, const std::vector<std::string>& vars);

}  // namespace tracelab
