#pragma once

#include <string>
#include <vector>

#include "modcalc/scalar_function.hpp"

namespace modcalc {

/// Parses an expression over the named chart coordinates.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base   := rational-literal | identifier | '(' expr ')' | '-' base
///   rational-literal := int ('/' uint)?
///
/// Whitespace is insignificant; identifiers match [A-Za-z_][A-Za-z0-9_]*.
/// Throws SyntaxError (with position), UnknownIdentifier, or
/// DivisionByZeroFunction.
ScalarFunction parse_scalar(const std::string& text,
                            const std::vector<std::string>& chart);

/// Parses a rational literal such as "-3/4".
Rational parse_rational(const std::string& text);

} // namespace modcalc
