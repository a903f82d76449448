#include "squarepeg/curve.hpp"

#include <fstream>
#include <sstream>

namespace squarepeg {

CurveF make_curve(RatPoly f) {
    if (f.nvars() != 2) throw std::invalid_argument("curve must have 2 variables");
    if (f.is_zero()) throw std::invalid_argument("curve polynomial is zero");
    CurveF c;
    c.m = f.degree();
    c.f = std::move(f);
    return c;
}

CurveF parse_curve(std::istream& in) {
    RatPoly f(2);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string si, sj, sc;
        if (!(ls >> si)) continue; // blank
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("curve file line " + std::to_string(lineno) + ": " + why);
        };
        if (!(ls >> sj >> sc)) fail("expected '<i> <j> <coeff>'");
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
        auto parse_exp = [&](const std::string& s) {
            for (size_t t = 0; t < s.size(); ++t)
                if (!std::isdigit(static_cast<unsigned char>(s[t])))
                    fail("exponent must be a nonnegative integer, got '" + s + "'");
            if (s.size() > 3) fail("exponent out of range: " + s);
            return std::stoi(s);
        };
        int i = parse_exp(si), j = parse_exp(sj);
        Rational coeff;
        try {
            coeff = parse_rational(sc);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        f.add_term(Exponent{i, j, 0, 0}, coeff);
    }
    if (f.is_zero()) throw std::invalid_argument("curve file defines the zero polynomial");
    return make_curve(std::move(f));
}

CurveF parse_curve(const std::string& text) {
    std::istringstream in(text);
    return parse_curve(in);
}

CurveF parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open curve file: " + path);
    return parse_curve(in);
}

std::string format_curve(const CurveF& c) {
    std::ostringstream out;
    const auto& terms = c.f.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        out << it->first[0] << " " << it->first[1] << " " << to_string(it->second) << "\n";
    return out.str();
}

std::string curve_to_string(const CurveF& c) {
    return c.f.to_string(std::span<const char* const>(kCurveVars, 2));
}

} // namespace squarepeg
