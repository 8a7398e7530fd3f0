#pragma once

#include <string>

#include "disord/mvp.hpp"

namespace disord {

// Parses a polynomial literal, e.g. "5 a c^3 + a^2 d^2 f^2 - 3*x*y*z".
// Factors are separated by "*" or whitespace; symbols may be multi-character;
// exponents are integers (negative allowed).  Raises ParseError with a
// 1-based position on malformed input.
Mvp parse_mvp(const std::string& source);

// Canonical algebra line: terms in canonical order joined by "  +  " or
// "  -  ", magnitude-1 coefficients omitted on non-constant terms; the zero
// polynomial prints "0".
std::string mvp_terms_string(const Mvp& p);

// Full display: "mvp object algebraically equal to" over the algebra line.
std::string print_mvp(const Mvp& p);

}  // namespace disord
