#include "squarepeg/poly.hpp"
#include "squarepeg/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace squarepeg {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty number");

    auto is_int = [](const std::string& t) {
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    // BigInt's string constructor takes a minus sign but not a plus.
    auto to_big = [](const std::string& t) { return BigInt(t[0] == '+' ? t.substr(1) : t); };

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            throw std::invalid_argument("bad fraction: " + text);
        Rational d{to_big(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(to_big(num)) / d;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        if (head.empty()) head = "0";
        if (tail.empty()) tail = "0";
        for (const std::string& part : {head, tail})
            for (char ch : part)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw std::invalid_argument("bad decimal: " + text);
        BigInt scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Rational r = Rational(BigInt(head) * scale + BigInt(tail)) / Rational(scale);
        return neg ? -r : r;
    }

    if (!is_int(s)) throw std::invalid_argument("bad number: " + text);
    return Rational(to_big(s));
}

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << "/" << denominator(r);
    return out.str();
}

CxPoly to_complex(const RatPoly& p) {
    CxPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, to_complex(c));
    return r;
}

namespace detail {

std::string coeff_to_display(const Rational& c, bool* negate) {
    *negate = c < 0;
    return squarepeg::to_string(*negate ? Rational(-c) : c);
}

std::string coeff_to_display(const std::complex<double>& c, bool* negate) {
    // Pure-real values print like rationals do; anything else gets the full
    // (re+imi) form and never folds its sign into the term separator.
    if (c.imag() == 0.0) {
        *negate = c.real() < 0;
        double v = std::abs(c.real());
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }
    *negate = false;
    char buf[128];
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
    return buf;
}

} // namespace detail

} // namespace squarepeg
