#ifndef HORNRED_EXPR_IO_HPP
#define HORNRED_EXPR_IO_HPP

#include <string>
#include <string_view>

#include <hornred/rational_expr.hpp>

namespace hornred {

// Deterministic plain-text rendering.  Terms are printed in descending
// graded-lex order with `*` for products and `^` for powers, so the output
// parses back to the identical canonical object.
std::string to_string(const Polynomial &p);
std::string to_string(const RationalExpr &r);

// Recursive-descent parser for the same syntax: `+ - * / ^`, parentheses,
// nonnegative integer literals, and identifiers drawn from `vars`.  Powers
// take integer exponents (negative allowed).  Whitespace is insignificant.
// Unknown identifiers or stray input raise ParseError.
RationalExpr parse_expr(std::string_view text, const VarSetPtr &vars);

} // namespace hornred

#endif
