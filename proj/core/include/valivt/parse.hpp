#pragma once

#include <string_view>

#include "valivt/polynomial.hpp"
#include "valivt/series.hpp"

namespace valivt {

// Expression grammar shared by elements and polynomials:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' exponent]
//   atom   := rational | 't' | 'X' | 'O' '(' expr ')' | '(' expr ')'
// with exact rational literals "a/b" and rational exponents, parenthesized
// or not. A "+ O(t^e)" summand attaches a truncation order. Errors carry
// the byte offset and the expected-token set.

// Polynomial in X with element coefficients.
Polynomial parse_polynomial(const FieldSpec& spec, std::string_view src);

// Element: a polynomial of degree 0 in X.
FieldElement parse_element(const FieldSpec& spec, std::string_view src);

// "head: [e0, e1, ...]; tail: geometric(c, rho, start)" or "; tail: none"
// (the tail clause may be omitted).
RestrictedSeries parse_series(const FieldSpec& spec, std::string_view src);

}  // namespace valivt
