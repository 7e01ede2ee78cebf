#pragma once

#include <string>
#include <string_view>

#include "arcstab/laurent.hpp"
#include "arcstab/polynomial.hpp"

namespace arcstab {

// Grammar (whitespace insignificant):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' ['-'] digits]
//   atom   := digits ['/' digits] | name | '(' expr ')'
// Variables must be declared by the caller; negative exponents are accepted
// only by parse_laurent, and only on monomials.

/// Throws ParseError (with position) on bad syntax or an undeclared variable.
MultiPoly parse_polynomial(std::string_view text, const VarList& vars);

LaurentPoly parse_laurent(std::string_view text, const std::string& var = "t");

}  // namespace arcstab
