// Python module wrapping the main operations: bounds, generators, Newton
// polytope checks, the homotopy solve, and SVG rendering. Everything crosses
// the boundary as plain ints and strings; the solve result is the same JSON
// document the CLI emits, so one parser serves both.

#include "squarepeg/curve.hpp"
#include "squarepeg/polytope.hpp"
#include "squarepeg/render.hpp"
#include "squarepeg/report_io.hpp"
#include "squarepeg/solver.hpp"
#include "squarepeg/squares.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace squarepeg;

namespace {

std::vector<std::string> generators_text(const std::string& curve_text) {
    CurveF curve = parse_curve(curve_text);
    CornerSystem cs = rewritten_generators(curve);
    auto names = std::span<const char* const>(kCornerVars, 4);
    std::vector<std::string> out;
    for (const auto& g : cs.g) out.push_back(g.to_string(names));
    return out;
}

std::vector<std::tuple<std::string, std::string, bool>>
newton_check(const std::string& curve_text) {
    CurveF curve = parse_curve(curve_text);
    CornerSystem cs = rewritten_generators(curve);
    std::vector<std::tuple<std::string, std::string, bool>> out;
    for (int i = 1; i <= 4; ++i) {
        LatticePolytopeP shape = shape_of_generator(i, curve.m);
        bool ok = newton_matches(cs.g[static_cast<size_t>(i - 1)], shape);
        out.emplace_back("g" + std::to_string(i), shape.to_string(), ok);
    }
    return out;
}

HomotopySettings make_settings(uint64_t seed, int budget, bool rotate) {
    HomotopySettings s;
    s.seed = seed;
    s.path_budget = budget;
    s.rotate = rotate;
    return s;
}

std::string solve_json(const std::string& curve_text, uint64_t seed, int budget, bool rotate) {
    CurveF curve = parse_curve(curve_text);
    SquareReport report = count_inscribed_squares(curve, make_settings(seed, budget, rotate));
    return report_to_json(report);
}

std::string render(const std::string& curve_text, uint64_t seed, int budget, bool rotate,
                   int grid) {
    CurveF curve = parse_curve(curve_text);
    SquareReport report = count_inscribed_squares(curve, make_settings(seed, budget, rotate));
    RenderOptions options;
    options.grid = grid;
    return render_svg(curve, report, options);
}

} // namespace

PYBIND11_MODULE(_squarepeg, mod) {
    mod.doc() = "Inscribed squares of plane algebraic curves";

    mod.def("inscribed_bound", &inscribed_bound, py::arg("m"),
            "Solution-count bound (m^4 - 5m^2 + 4m) / 4 for a degree-m curve");
    mod.def("mixed_volume", &mixed_volume, py::arg("m"),
            "Mixed volume of the four generator polytopes");
    mod.def(
        "bezout", [](int64_t m) { return m * m * m * m; }, py::arg("m"),
        "Naive Bezout count m^4 for comparison");
    mod.def(
        "volume_polynomial",
        [](int64_t m) {
            return minkowski_volume_poly(m).to_string(std::span<const char* const>(kScaleVars, 4));
        },
        py::arg("m"), "Volume of l1*N(g1) + ... + l4*N(g4) as a polynomial in l1..l4");
    mod.def("generators", &generators_text, py::arg("curve"),
            "Rewritten corner system g1..g4 of a curve given in 'i j coeff' lines");
    mod.def("newton_check", &newton_check, py::arg("curve"),
            "List of (generator, predicted polytope, support matches) triples");
    mod.def("solve_json", &solve_json, py::arg("curve"), py::arg("seed") = 0,
            py::arg("budget") = 625, py::arg("rotate") = true,
            "Count inscribed squares; returns the JSON report the CLI emits");
    mod.def("render_svg", &render, py::arg("curve"), py::arg("seed") = 0,
            py::arg("budget") = 625, py::arg("rotate") = true, py::arg("grid") = 256,
            "Solve and draw the curve with its real inscribed squares as SVG");

    py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);
}
