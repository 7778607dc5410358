#ifndef SEMICONJ_EXPR_HPP
#define SEMICONJ_EXPR_HPP

#include <semiconj/rational_function.hpp>

#include <string>

namespace semiconj {

// Parses expressions like "z^2", "(z^2-2)/(z-2*z^3)", "1/2*(z^2+1/z^2)".
// Grammar (documented in docs/expression-grammar.md): +, -, *, /, ^ with
// integer exponents, parentheses, the variable z, and exact integer or
// rational literals. Throws parse_error on malformed input.
RationalFunction parse_function(const std::string& text);

} // namespace semiconj

#endif
