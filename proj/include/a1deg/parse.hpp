#pragma once

#include <string>
#include <vector>

#include "a1deg/multipoly.hpp"

namespace a1deg {

/// Parse a polynomial with rational coefficients.
///
/// Grammar: integer and rational literals (`a` or `a/b`), identifiers
/// `[a-zA-Z][a-zA-Z0-9]*`, `+ - * ^`, parentheses. `*` may be omitted after a
/// literal followed by a variable, and before `(`. `^` takes a nonnegative
/// integer literal. Whitespace is ignored.
MultiPoly<Rational> parse_poly(const std::string& text, const std::vector<std::string>& variables);

/// Parse a polynomial in exactly one variable.
QPoly parse_unipoly(const std::string& text, const std::string& variable);

/// Identifiers occurring in `text`, in order of first appearance.
std::vector<std::string> identifiers_in(const std::string& text);

/// Split "F/G" at its last '/' outside parentheses. Rational literals in F or
/// G must then be parenthesized, e.g. "(1/2)*x^2/x".
std::pair<std::string, std::string> split_fraction(const std::string& text);

/// Comma-separated list of fields, trimmed.
std::vector<std::string> split_list(const std::string& text, char sep);

}  // namespace a1deg
