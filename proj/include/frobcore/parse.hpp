#pragma once

#include <string_view>
#include <vector>

#include "frobcore/polynomial.hpp"

namespace frobcore {

// Parses +, -, *, ^, parentheses, integers and variable names of `ring`.
// Errors are ParseError positioned at (line, column + offset into text).
Polynomial parse_polynomial(const Ring& ring, std::string_view text, int line = 1, int column = 1);

// "[f1; f2; ...]" (brackets optional; commas also separate). "[]" yields no polynomials.
std::vector<Polynomial> parse_polynomial_list(const Ring& ring, std::string_view text, int line = 1,
                                              int column = 1);

}  // namespace frobcore
