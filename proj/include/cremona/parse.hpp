#pragma once

#include <string>

#include "cremona/homogpoly.hpp"

namespace cremona {

/// Parses an expression in x, y, z with rational coefficients (a or a/b),
/// operators + - * ^ and parentheses. Exponents are nonnegative integers.
/// The result may be non-homogeneous; callers that need a form check that
/// themselves. Throws Error(SyntaxError) with position information.
HomogPoly3 parse_polynomial(const std::string& text);

/// As above but requires a nonzero homogeneous result.
HomogPoly3 parse_form(const std::string& text);

}  // namespace cremona
