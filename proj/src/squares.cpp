#include "squarepeg/squares.hpp"

#include <tuple>

namespace squarepeg {

std::array<std::array<std::complex<double>, 2>, 4> corners(const SquareParam& s) {
    return {{{s.a + s.c, s.b + s.d},
             {s.a + s.d, s.b - s.c},
             {s.a - s.c, s.b - s.d},
             {s.a - s.d, s.b + s.c}}};
}

std::array<SquareParam, 4> orbit(const SquareParam& s) {
    return {{{s.a, s.b, s.c, s.d},
             {s.a, s.b, s.d, -s.c},
             {s.a, s.b, -s.c, -s.d},
             {s.a, s.b, -s.d, s.c}}};
}

static auto canonical_key(const SquareParam& s) {
    return std::make_tuple(s.c.real(), s.c.imag(), s.d.real(), s.d.imag(),
                           s.a.real(), s.a.imag(), s.b.real(), s.b.imag());
}

SquareParam canonicalize(const SquareParam& s) {
    auto members = orbit(s);
    const SquareParam* best = &members[0];
    for (const auto& m : members)
        if (canonical_key(m) > canonical_key(*best)) best = &m;
    return *best;
}

bool is_degenerate(const SquareParam& s, double tol) {
    return std::abs(s.c) + std::abs(s.d) < tol;
}

std::array<RatPoly, 4> naive_generators(const CurveF& curve) {
    auto var = [](int i) { return RatPoly::variable(4, i); };
    RatPoly a = var(0), b = var(1), c = var(2), d = var(3);
    auto sub = [&](const RatPoly& x, const RatPoly& y) {
        return curve.f.substitute({x, y});
    };
    return {sub(a + c, b + d), sub(a - c, b - d), sub(a - d, b + c), sub(a + d, b - c)};
}

CornerSystem rewritten_generators(const CurveF& curve) {
    CornerSystem cs;
    cs.m = curve.m;
    cs.naive = naive_generators(curve);
    cs.h = {{{1, 1, -1, -1}, {1, -1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}}};
    for (int i = 0; i < 4; ++i) {
        RatPoly g(4);
        for (int j = 0; j < 4; ++j) {
            int hij = cs.h[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (hij == 0) continue;
            g += cs.naive[static_cast<size_t>(j)].scaled(Rational(hij));
        }
        cs.g[static_cast<size_t>(i)] = std::move(g);
    }
    return cs;
}

bool monomial_present(int i, const Exponent& gamma) {
    if (i < 1 || i > 4) throw std::invalid_argument("generator index must be 1..4");
    int g3 = gamma[2], g4 = gamma[3];
    switch (i) {
        case 4:
            return true;
        case 2:
        case 3:
            return (g3 + g4) % 2 == 1;
        default: // g1: even c+d degree, but not c,d powers equal and even
            if ((g3 + g4) % 2 == 1) return false;
            return !(g3 == g4 && g3 % 2 == 0);
    }
}

static Rational binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int t = 0; t < k; ++t) r = r * Rational(n - t) / Rational(t + 1);
    return r;
}

Rational presence_coefficient(const Exponent& gamma, const std::array<int, 4>& hrow,
                              const CurveF& curve) {
    int g1 = gamma[0], g2 = gamma[1], g3 = gamma[2], g4 = gamma[3];
    auto C = [&](int p, int q) { return curve.f.coefficient(Exponent{p, q, 0, 0}); };
    int s34 = ((g3 + g4) % 2 == 0) ? 1 : -1;
    int s3 = (g3 % 2 == 0) ? 1 : -1;
    int s4 = (g4 % 2 == 0) ? 1 : -1;
    // Columns 0,1 substitute (a+-c, b+-d); columns 2,3 substitute (a-+d, b+-c).
    Rational first = binom(g1 + g3, g1) * binom(g2 + g4, g2) * C(g1 + g3, g2 + g4) *
                     Rational(hrow[0] + hrow[1] * s34);
    Rational second = binom(g1 + g4, g1) * binom(g2 + g3, g2) * C(g1 + g4, g2 + g3) *
                      Rational(hrow[2] * s4 + hrow[3] * s3);
    return first + second;
}

CurveF transform_curve(const CurveF& curve, const Rational& cos_t, const Rational& sin_t,
                       const std::array<Rational, 2>& shift) {
    if (cos_t * cos_t + sin_t * sin_t != 1)
        throw std::invalid_argument("transform_curve: cos^2 + sin^2 must be exactly 1");
    RatPoly x = RatPoly::variable(2, 0), y = RatPoly::variable(2, 1);
    RatPoly xi = x.scaled(cos_t) - y.scaled(sin_t) + RatPoly::constant(2, shift[0]);
    RatPoly yi = x.scaled(sin_t) + y.scaled(cos_t) + RatPoly::constant(2, shift[1]);
    CurveF out = make_curve(curve.f.substitute({xi, yi}));
    // Rotations are invertible, so the degree cannot drop.
    if (out.m != curve.m) throw std::logic_error("transform_curve changed the degree");
    return out;
}

} // namespace squarepeg
