#pragma once

#include <string>

#include "hsmult/polynomial.hpp"

namespace hsmult {

// Parses the textual polynomial form:
//
//   poly   := [sign] term ((''+''|''-'') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ident ('^' nat)?
//   coeff  := nat ('/' posnat)?
//   ident  := [A-Za-z][A-Za-z0-9_]*
//
// Whitespace between tokens is ignored. Identifiers must name ambient
// variables. Raises parse_error (with byte offset) on malformed input,
// input_error on unknown identifiers or a zero denominator.
Polynomial parse_polynomial(const std::string& src, const Ambient& ambient);

}  // namespace hsmult
