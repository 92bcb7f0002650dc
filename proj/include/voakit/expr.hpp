#pragma once

#include <string>

#include "voakit/voa.hpp"

namespace voakit {

// Evaluates a prefix expression such as "star 0 h h", "theta h" or
// "circmn 0 0 one w". Operands are basis literals or bracketed
// subexpressions: "dot h [star 0 h h]". Throws UsageError with the character
// position on parse errors.
GradedVector evaluate_expression(const VOA& A, const std::string& text);

// Names and arities of the registered operations, for help output.
std::string expression_help();

}  // namespace voakit
