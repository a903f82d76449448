#pragma once

// Sparse multivariate polynomials over an exact or floating coefficient ring.
// Terms live in a map keyed by exponent tuple and ordered graded-lex, so
// iteration (and therefore printing, hashing, serialization) is deterministic.
// Only 2 and 4 variables are ever used: curves f(x,y) and corner-system
// generators g(a,b,c,d); the exponent type is a fixed array of 4 with unused
// slots held at zero.

#include "squarepeg/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace squarepeg {

using Exponent = std::array<int, 4>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

// Graded-lexicographic "less": lower total degree first, ties broken
// lexicographically on the exponent tuple.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

namespace detail {
inline std::complex<double> coeff_cast(const Rational& r, std::complex<double>*) {
    return to_complex(r);
}
inline double coeff_cast(const Rational& r, double*) { return to_double(r); }
inline Rational coeff_cast(const Rational& r, Rational*) { return r; }
inline std::complex<double> coeff_cast(const std::complex<double>& c, std::complex<double>*) {
    return c;
}
} // namespace detail

template <typename Coeff>
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Coeff, GradedLexLess>;

    explicit MultiPoly(int nvars = 4) : nvars_(nvars) {
        if (nvars != 2 && nvars != 4)
            throw std::invalid_argument("MultiPoly supports 2 or 4 variables");
    }

    static MultiPoly constant(int nvars, const Coeff& c) {
        MultiPoly p(nvars);
        p.add_term(Exponent{0, 0, 0, 0}, c);
        return p;
    }

    static MultiPoly monomial(int nvars, const Exponent& e, const Coeff& c) {
        MultiPoly p(nvars);
        p.add_term(e, c);
        return p;
    }

    // x_i as a polynomial, i zero-based.
    static MultiPoly variable(int nvars, int i) {
        Exponent e{0, 0, 0, 0};
        e.at(static_cast<size_t>(i)) = 1;
        if (i >= nvars) throw std::invalid_argument("variable index out of range");
        return monomial(nvars, e, Coeff(1));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t n_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        if (terms_.empty()) return -1;
        return total_degree(terms_.rbegin()->first);
    }

    Coeff coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    // Accumulates c onto the term at e, dropping the entry if it cancels.
    void add_term(const Exponent& e, const Coeff& c) {
        for (int i = 0; i < 4; ++i) {
            if (e[i] < 0) throw std::invalid_argument("negative exponent");
            if (i >= nvars_ && e[i] != 0)
                throw std::invalid_argument("exponent uses variable beyond nvars");
        }
        if (c == Coeff(0)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff(0)) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, Coeff(0) - c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Coeff(0) - c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_ring(b);
        MultiPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Coeff& s) const {
        MultiPoly r(nvars_);
        if (s == Coeff(0)) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Sum of the terms of total degree exactly k.
    MultiPoly homogeneous_part(int k) const {
        if (k < 0) throw std::invalid_argument("homogeneous_part: negative degree");
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == k) r.terms_.emplace(e, c);
        return r;
    }

    // Evaluation at a point whose scalar type may be wider than Coeff
    // (rational polynomial at a complex point, say).
    template <typename X>
    X evaluate(std::span<const X> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("evaluate: point length != nvars");
        X acc(0);
        for (const auto& [e, c] : terms_) {
            X t = detail::coeff_cast(c, static_cast<X*>(nullptr));
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) t *= point[static_cast<size_t>(i)];
            acc += t;
        }
        return acc;
    }

    template <typename X>
    X evaluate(std::initializer_list<X> point) const {
        std::vector<X> v(point);
        return evaluate(std::span<const X>(v));
    }

    // Ring homomorphism: substitute images[i] for variable i. All images must
    // share one ring, which becomes the ring of the result.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("substitute: need one image per variable");
        int out_vars = images.front().nvars();
        for (const auto& p : images)
            if (p.nvars() != out_vars)
                throw std::invalid_argument("substitute: images disagree on nvars");
        // Cache image powers up to the degrees that actually occur.
        std::array<int, 4> maxdeg{0, 0, 0, 0};
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < nvars_; ++i) maxdeg[static_cast<size_t>(i)] = std::max(maxdeg[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
        std::vector<std::vector<MultiPoly>> pow(static_cast<size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) {
            auto& pi = pow[static_cast<size_t>(i)];
            pi.push_back(constant(out_vars, Coeff(1)));
            for (int k = 1; k <= maxdeg[static_cast<size_t>(i)]; ++k)
                pi.push_back(pi.back() * images[static_cast<size_t>(i)]);
        }
        MultiPoly r(out_vars);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(out_vars, c);
            for (int i = 0; i < nvars_; ++i)
                if (e[static_cast<size_t>(i)] > 0) t *= pow[static_cast<size_t>(i)][static_cast<size_t>(e[static_cast<size_t>(i)])];
            r += t;
        }
        return r;
    }

    // Partial derivative with respect to variable i (zero-based).
    MultiPoly derivative(int i) const {
        if (i < 0 || i >= nvars_) throw std::invalid_argument("derivative: bad variable");
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            Exponent d = e;
            d[static_cast<size_t>(i)] -= 1;
            r.add_term(d, c * Coeff(k));
        }
        return r;
    }

    // Human-readable form, leading term first. Zero prints "0".
    std::string to_string(std::span<const char* const> names) const;

private:
    void check_same_ring(const MultiPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("polynomial nvars mismatch");
    }

    int nvars_;
    TermMap terms_;
};

using RatPoly = MultiPoly<Rational>;
using CxPoly = MultiPoly<std::complex<double>>;

// Exact-to-floating coefficient conversion.
CxPoly to_complex(const RatPoly& p);

namespace detail {
std::string coeff_to_display(const Rational& c, bool* negate);
std::string coeff_to_display(const std::complex<double>& c, bool* negate);
} // namespace detail

template <typename Coeff>
std::string MultiPoly<Coeff>::to_string(std::span<const char* const> names) const {
    if (static_cast<int>(names.size()) < nvars_)
        throw std::invalid_argument("to_string: not enough variable names");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // rbegin: highest graded-lex term leads.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = false;
        std::string cs = detail::coeff_to_display(c, &neg);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[static_cast<size_t>(i)];
            if (k > 1) vars += "^" + std::to_string(k);
        }
        if (vars.empty()) {
            out << cs;
        } else if (cs == "1") {
            out << vars;
        } else {
            out << cs << "*" << vars;
        }
    }
    return out.str();
}

// Variable name sets used across the project.
inline constexpr const char* kCurveVars[] = {"x", "y"};
inline constexpr const char* kCornerVars[] = {"a", "b", "c", "d"};
inline constexpr const char* kScaleVars[] = {"l1", "l2", "l3", "l4"};

} // namespace squarepeg
