#pragma once

#include <string_view>

#include "ncalg/ncpoly.hpp"

namespace ncalg {

/// Parses an expression over the algebra's generators.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | primary
///   primary := INTEGER ['/' INTEGER] | IDENT | '(' expr ')'
///
/// Juxtaposition is rejected; multiplication is always an explicit '*'.
/// Errors are ParseError with a 1-based column (unknown generator, syntax),
/// or ArithmeticError wrapped as ParseError for zero or non-invertible
/// denominators.
NcPoly parse_poly(std::string_view text, const AlgebraPtr& algebra);

}  // namespace ncalg
