#pragma once

#include <string>

#include "fibercone/poly.hpp"

namespace fibercone {

/// Parses a polynomial expression over the given ring.
///
/// Grammar (whitespace free between tokens):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := coeff | var ['^' nat] | '(' expr ')' ['^' nat]
///   coeff  := nat ['/' nat]
///
/// Examples: "x^7 + x^4*y^2 + y^12", "(x+y)^2 - x^2 - 2*x*y", "1/2*x - y".
/// Unknown variables, malformed exponents and coefficients not in the
/// field raise InputError with a position hint.
Poly parse_poly(const std::string& text, RingPtr ring);

} // namespace fibercone
