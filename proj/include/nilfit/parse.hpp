#pragma once

#include <string>

#include "nilfit/polynomial.hpp"

namespace nilfit {

// Parses the ASCII polynomial grammar: integer/rational literals ("3",
// "-1/2"), ring variables, '+', '-', '*', '^' and parentheses. Whitespace
// is ignored; multiplication is always explicit. Throws ParseError with a
// position on bad syntax and on unknown variables.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Canonical rendering: terms descending under the ring's order, compact
// signs, coefficient 1 suppressed, '*' between factors, '^' for exponents.
// parse(print(f)) == f for every canonical f.
std::string to_string(const Polynomial& p);

}  // namespace nilfit
