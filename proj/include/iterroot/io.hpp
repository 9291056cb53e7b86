#pragma once

#include <string>

#include "iterroot/poly.hpp"

namespace iterroot {

/// Canonical text for a field element. Exact units print as
/// 1, -1, w, -w, w^2, -w^2; other exact values as "p", "q*w", or "p+q*w";
/// approximate values as "a" or "a+bi" with 17 significant digits.
std::string field_str(const Eisenstein& x);
std::string field_str(const ApproxComplex& x);

/// Sparse monomial form, highest power first, zero terms omitted; composite
/// coefficients are parenthesized (e.g. "z^4+2z^3+3/2z^2+1/2z-7/16",
/// "w*z^2", "(1+2*w)z^3"). The zero polynomial prints as "0".
std::string poly_str(const Polynomial<Eisenstein>& p);
std::string poly_str(const Polynomial<ApproxComplex>& p);

/// Parsers accept either sparse monomial form or a comma-separated
/// coefficient list, highest power first. Failures raise ParseError with the
/// byte offset of the offending character.
Eisenstein parse_field_exact(const std::string& s);
ApproxComplex parse_field_approx(const std::string& s);
Polynomial<Eisenstein> parse_poly_exact(const std::string& s);
Polynomial<ApproxComplex> parse_poly_approx(const std::string& s);

}  // namespace iterroot
