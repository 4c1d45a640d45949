#ifndef IGUSA_PARSER_HPP
#define IGUSA_PARSER_HPP

#include <string>
#include <vector>

#include "igusa/errors.hpp"
#include "igusa/poly.hpp"

namespace igusa {

// Grammar: integer/rational literals, variable names [a-zA-Z][a-zA-Z0-9_]*,
// operators + - * / ^ and parentheses. '*' is required between factors
// ("x*y", never "xy"); '/' only by a nonzero constant; '^' takes a
// nonnegative integer literal. Throws ParseError with a source position.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

// Components separated by ';'. Validates the Mapping invariants (f(0)=0, ...).
Mapping parse_mapping(const std::string& text,
                      const std::vector<std::string>& variables);

// Comma-separated variable list ("x,y,z") with the same name syntax.
std::vector<std::string> parse_variable_list(const std::string& text);

}  // namespace igusa

#endif
