#pragma once

// The corner system of a plane curve. A square in the complex plane is
// parametrized by (a,b,c,d): center (a,b), corners
//
//   (a+c, b+d), (a+d, b-c), (a-c, b-d), (a-d, b+c),
//
// and the squares inscribed in f = 0 are the solutions of the four corner
// equations. The raw system f(corner_i) = 0 is replaced by an equivalent
// integer recombination g1..g4 whose Newton polytopes are much smaller, which
// is what drives the path count of the solver and the polytope bound.

#include "squarepeg/curve.hpp"
#include "squarepeg/poly.hpp"

#include <array>
#include <complex>

namespace squarepeg {

struct SquareParam {
    std::complex<double> a, b, c, d;
};

// Corner order matches the parametrization above.
std::array<std::array<std::complex<double>, 2>, 4> corners(const SquareParam& s);

// The four parameter tuples describing the same square: rotating which corner
// is listed first maps (c,d) to (d,-c).
std::array<SquareParam, 4> orbit(const SquareParam& s);

// Orbit member maximizing (Re c, Im c, Re d, Im d, Re a, Im a, Re b, Im b)
// lexicographically; constant on orbits.
SquareParam canonicalize(const SquareParam& s);

// Degenerate squares have all corners equal: |c| + |d| < tol.
bool is_degenerate(const SquareParam& s, double tol);

// Corner substitutions of f, in the column order used by the h-matrix:
//   f(a+c,b+d), f(a-c,b-d), f(a-d,b+c), f(a+d,b-c).
// Note this is NOT the corner order; the +/- pairing keeps the presence
// formula's sign bookkeeping straight.
std::array<RatPoly, 4> naive_generators(const CurveF& curve);

struct CornerSystem {
    int m = 0;
    std::array<RatPoly, 4> naive; // h-matrix column order, see naive_generators
    std::array<RatPoly, 4> g;     // g[i] = sum_j h[i][j] * naive[j]
    std::array<std::array<int, 4>, 4> h{};
};

// g1 = A + B - C - D, g2 = A - B, g3 = C - D, g4 = D where
// (A,B,C,D) = naive_generators. Solution set is unchanged: the h-matrix is
// unimodular, and the naive system is recovered by
//   D = g4, C = g3 + g4, A = (g1 + g2 + g3 + 2 g4)/2, B = (g1 - g2 + g3 + 2 g4)/2.
CornerSystem rewritten_generators(const CurveF& curve);

// Generic presence law for the monomial a^g1 b^g2 c^g3 d^g4 in generator i
// (1-based). Coefficient-independent: says whether the presence coefficient
// is a nonzero integer combination of curve coefficients.
bool monomial_present(int i, const Exponent& gamma);

// The actual coefficient of the monomial gamma in sum_j hrow[j]*naive[j] for
// the given curve, computed from the binomial presence formula rather than by
// expansion. hrow follows the h-matrix column order.
Rational presence_coefficient(const Exponent& gamma, const std::array<int, 4>& hrow,
                              const CurveF& curve);

// f'(x,y) = f(cos*x - sin*y + t1, sin*x + cos*y + t2): the curve in rotated
// and shifted coordinates. Requires cos^2 + sin^2 = 1 (use a Pythagorean
// triple for exactness). Degree is preserved.
CurveF transform_curve(const CurveF& curve, const Rational& cos_t, const Rational& sin_t,
                       const std::array<Rational, 2>& shift);

} // namespace squarepeg
