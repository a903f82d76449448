#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace squarepeg {

// Exact rational scalar used by everything symbolic. Header-only
// boost::multiprecision, so no library to link.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline std::complex<double> to_complex(const Rational& r) {
    return {to_double(r), 0.0};
}

// Parses "p/q", an integer, or a plain decimal like "-0.25" into an exact
// rational. Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

} // namespace squarepeg
