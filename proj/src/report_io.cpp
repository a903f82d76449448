#include "squarepeg/report_io.hpp"

#include <json.hpp>

namespace squarepeg {

namespace {

using json = nlohmann::ordered_json;

json complex_to_json(const Cx& z) { return json::array({z.real(), z.imag()}); }

Cx complex_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

} // namespace

std::string report_to_json(const SquareReport& report) {
    json j;
    j["degree"] = report.degree;
    j["n_paths"] = report.n_paths;
    j["n_finite"] = report.n_finite;
    j["n_diverged"] = report.n_diverged;
    j["n_failed"] = report.n_failed;
    j["n_nondegenerate"] = report.n_nondegenerate;
    j["n_orbits"] = report.n_orbits;
    j["n_real_squares"] = report.n_real_squares;
    j["squares"] = json::array();
    for (const auto& sq : report.squares) {
        json s;
        s["a"] = complex_to_json(sq.param.a);
        s["b"] = complex_to_json(sq.param.b);
        s["c"] = complex_to_json(sq.param.c);
        s["d"] = complex_to_json(sq.param.d);
        s["real"] = sq.real;
        s["multiplicity"] = sq.multiplicity;
        s["residual"] = sq.residual;
        s["corner_residual"] = sq.corner_residual;
        j["squares"].push_back(s);
    }
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

SquareReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    SquareReport r;
    r.degree = j.at("degree").get<int>();
    r.n_paths = j.at("n_paths").get<int>();
    r.n_finite = j.at("n_finite").get<int>();
    r.n_diverged = j.at("n_diverged").get<int>();
    r.n_failed = j.at("n_failed").get<int>();
    r.n_nondegenerate = j.at("n_nondegenerate").get<int>();
    r.n_orbits = j.at("n_orbits").get<int>();
    r.n_real_squares = j.at("n_real_squares").get<int>();
    for (const auto& s : j.at("squares")) {
        ReportedSquare sq;
        sq.param.a = complex_from_json(s.at("a"));
        sq.param.b = complex_from_json(s.at("b"));
        sq.param.c = complex_from_json(s.at("c"));
        sq.param.d = complex_from_json(s.at("d"));
        sq.real = s.at("real").get<bool>();
        sq.multiplicity = s.at("multiplicity").get<int>();
        sq.residual = s.at("residual").get<double>();
        sq.corner_residual = s.at("corner_residual").get<double>();
        r.squares.push_back(sq);
    }
    for (const auto& w : j.at("warnings")) r.warnings.push_back(w.get<std::string>());
    return r;
}

} // namespace squarepeg
