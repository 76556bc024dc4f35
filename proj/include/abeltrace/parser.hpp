#pragma once

#include "abeltrace/ratfunc.hpp"

#include <string>

namespace abeltrace {

// Grammar (UTF-8 text, whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-')* atom ('^' INT)?
//   atom   := INT | VAR | '(' expr ')'
// with VAR one of x1..xn, y, a1..an, b1..bn and '^' binding tightest.
// In polynomial mode '/' is only accepted with a nonzero constant divisor
// (rational literals like 3/2); parse_ratfunc accepts general quotients.
MultiPoly parse_poly(const std::string& text, int n);
RatFunc parse_ratfunc(const std::string& text, int n);

} // namespace abeltrace
