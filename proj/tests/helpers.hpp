#pragma once

// Small builders shared by the test files.

#include "squarepeg/curve.hpp"
#include "squarepeg/poly.hpp"

#include <random>
#include <tuple>
#include <vector>

namespace sqt {

using squarepeg::CurveF;
using squarepeg::Exponent;
using squarepeg::Rational;
using squarepeg::RatPoly;

inline RatPoly make2(const std::vector<std::tuple<int, int, Rational>>& terms) {
    RatPoly p(2);
    for (const auto& [i, j, c] : terms) p.add_term(Exponent{i, j, 0, 0}, c);
    return p;
}

inline RatPoly make4(const std::vector<std::tuple<int, int, int, int, Rational>>& terms) {
    RatPoly p(4);
    for (const auto& [a, b, c, d, co] : terms) p.add_term(Exponent{a, b, c, d}, co);
    return p;
}

// Dense degree-m curve with every coefficient a nonzero integer in
// [-bound, bound]: "generic" for the presence law, deterministically seeded.
inline CurveF random_dense_curve(int m, std::mt19937_64& rng, long bound = 99) {
    RatPoly f(2);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) {
            long c = 0;
            while (c == 0)
                c = static_cast<long>(rng() % (2 * static_cast<unsigned long>(bound) + 1)) - bound;
            f.add_term(Exponent{i, j, 0, 0}, Rational(c));
        }
    return squarepeg::make_curve(std::move(f));
}

// Random sparse polynomial for ring-axiom checks: small integer coefficients,
// possibly zero, a handful of low-degree terms.
inline RatPoly random_poly(int nvars, std::mt19937_64& rng) {
    RatPoly p(nvars);
    int nterms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < nterms; ++t) {
        Exponent e{0, 0, 0, 0};
        for (int v = 0; v < nvars; ++v) e[static_cast<size_t>(v)] = static_cast<int>(rng() % 3);
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 3);
        p.add_term(e, Rational(num, den));
    }
    return p;
}

} // namespace sqt
