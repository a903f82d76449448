#pragma once

// Plane curves f(x,y) = 0 with exact rational coefficients, plus the text
// format the CLI reads and writes. One term per line, "<i> <j> <coeff>",
// exponent of x then exponent of y; '#' starts a comment; coefficients are
// integers, decimals, or fractions "p/q". Terms with equal exponents
// accumulate.

#include "squarepeg/poly.hpp"

#include <iosfwd>
#include <string>

namespace squarepeg {

struct CurveF {
    RatPoly f{2};
    int m = 0; // total degree, cached; always >= 0 and f is never zero
};

// Wraps a 2-variable polynomial, rejecting zero.
CurveF make_curve(RatPoly f);

CurveF parse_curve(std::istream& in);
CurveF parse_curve(const std::string& text);
CurveF parse_curve_file(const std::string& path);

// Inverse of parse_curve up to term order: parse_curve(format_curve(c)).f == c.f.
std::string format_curve(const CurveF& c);

// Display form like "x^2 + 4*y^2 - 1".
std::string curve_to_string(const CurveF& c);

} // namespace squarepeg
