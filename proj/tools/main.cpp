#include "squarepeg/curve.hpp"
#include "squarepeg/polytope.hpp"
#include "squarepeg/render.hpp"
#include "squarepeg/report_io.hpp"
#include "squarepeg/solver.hpp"
#include "squarepeg/squares.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

// Exit codes: 0 success, 1 usage or domain error, 2 curve parse error,
// 3 path budget exceeded, 4 solver or check failure, 5 I/O error.
enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kBudget = 3, kSolve = 4, kIo = 5 };

using namespace squarepeg;
using json = nlohmann::ordered_json;

CurveF load_curve_or_exit(const std::string& path) {
    try {
        return parse_curve_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kParse);
    }
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_complex(const std::complex<double>& z) {
    if (std::abs(z.imag()) < 1e-12) return fmt_g(z.real());
    return fmt_g(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_g(std::abs(z.imag())) + "i";
}

int cmd_bound(int m, bool as_json) {
    int64_t mv = mixed_volume(m);
    int64_t bd = inscribed_bound(m);
    int64_t bez = static_cast<int64_t>(m) * m * m * m;
    if (as_json) {
        json j;
        j["m"] = m;
        j["mixed_volume"] = mv;
        j["bound"] = bd;
        j["bezout"] = bez;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "MV=" << mv << " bound=" << bd << " bezout=" << bez << "\n";
    }
    return kOk;
}

int cmd_mixed_volume(int m, bool as_json) {
    int64_t mv = mixed_volume(m);
    std::optional<std::string> poly;
    if (m >= 4)
        poly = minkowski_volume_poly(m).to_string(std::span<const char* const>(kScaleVars, 4));
    if (as_json) {
        json j;
        j["m"] = m;
        j["mixed_volume"] = mv;
        if (poly) j["volume_polynomial"] = *poly;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "MV=" << mv << "\n";
        if (poly) std::cout << "volume polynomial: " << *poly << "\n";
    }
    return kOk;
}

int cmd_generators(const std::string& path, bool as_json) {
    CurveF curve = load_curve_or_exit(path);
    CornerSystem cs = rewritten_generators(curve);
    auto names = std::span<const char* const>(kCornerVars, 4);
    if (as_json) {
        json j;
        j["degree"] = curve.m;
        j["generators"] = json::array();
        for (const auto& g : cs.g) j["generators"].push_back(g.to_string(names));
        std::cout << j.dump(2) << "\n";
    } else {
        for (int i = 0; i < 4; ++i)
            std::cout << "g" << i + 1 << " = " << cs.g[static_cast<size_t>(i)].to_string(names) << "\n";
    }
    return kOk;
}

int cmd_newton_check(const std::string& path, bool as_json) {
    CurveF curve = load_curve_or_exit(path);
    if (curve.m < 4) {
        std::cerr << "error: newton-check needs a curve of degree >= 4 (the shape table "
                     "starts there); got degree "
                  << curve.m << "\n";
        return kUsage;
    }
    CornerSystem cs = rewritten_generators(curve);
    bool all_ok = true;
    json rows = json::array();
    for (int i = 1; i <= 4; ++i) {
        LatticePolytopeP shape = shape_of_generator(i, curve.m);
        bool ok = newton_matches(cs.g[static_cast<size_t>(i - 1)], shape);
        all_ok = all_ok && ok;
        if (as_json) {
            json row;
            row["generator"] = i;
            row["shape"] = shape.to_string();
            row["matches"] = ok;
            rows.push_back(row);
        } else {
            std::cout << "g" << i << ": " << shape.to_string() << (ok ? " PASS" : " FAIL")
                      << "\n";
        }
    }
    if (as_json) {
        json j;
        j["degree"] = curve.m;
        j["checks"] = rows;
        j["all_match"] = all_ok;
        std::cout << j.dump(2) << "\n";
    }
    return all_ok ? kOk : kSolve;
}

void print_report(const SquareReport& r) {
    std::cout << "degree " << r.degree << " curve, " << r.n_paths << " paths tracked\n";
    std::cout << r.n_nondegenerate << " solutions, " << r.n_orbits
              << (r.n_orbits == 1 ? " square" : " squares") << "\n";
    std::cout << r.n_real_squares << (r.n_real_squares == 1 ? " real square" : " real squares")
              << "\n";
    int idx = 0;
    for (const auto& sq : r.squares) {
        ++idx;
        if (!sq.real) continue;
        std::cout << "  square " << idx << ": center (" << fmt_g(sq.param.a.real()) << ", "
                  << fmt_g(sq.param.b.real()) << ") offset (" << fmt_g(sq.param.c.real())
                  << ", " << fmt_g(sq.param.d.real()) << ")";
        if (sq.multiplicity > 1) std::cout << " multiplicity " << sq.multiplicity;
        std::cout << "\n";
    }
    for (const auto& sq : r.squares) {
        if (sq.real) continue;
        std::cout << "  complex square: c = " << fmt_complex(sq.param.c)
                  << ", d = " << fmt_complex(sq.param.d) << "\n";
    }
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
}

int run_solve(const CurveF& curve, HomotopySettings& settings, bool as_json,
              SquareReport* out) {
    try {
        SquareReport r = count_inscribed_squares(curve, settings);
        if (out) *out = r;
        if (as_json)
            std::cout << report_to_json(r);
        else
            print_report(r);
        return kOk;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSolve;
    }
}

bool parse_range(const std::string& text, double* lo, double* hi) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        size_t used = 0;
        std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        *lo = std::stod(a, &used);
        if (used != a.size()) return false;
        *hi = std::stod(b, &used);
        if (used != b.size()) return false;
    } catch (...) {
        return false;
    }
    return *lo < *hi;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inscribed squares of algebraic plane curves: bounds, generators, solving, plots"};
    app.require_subcommand(1);
    uint64_t seed = 0;
    bool as_json = false;
    app.add_option("--seed", seed, "seed for the rotation and homotopy constants");
    app.add_flag("--json", as_json, "machine-readable output");

    int m = 0;
    auto* bound = app.add_subcommand("bound", "mixed-volume bound on isolated inscribed squares");
    bound->add_option("degree", m, "curve degree")->required()->check(CLI::Range(1, 50));

    int m2 = 0;
    auto* mixed = app.add_subcommand("mixed-volume", "mixed volume of the corner system's Newton polytopes");
    mixed->add_option("degree", m2, "curve degree")->required()->check(CLI::Range(1, 50));

    std::string gen_file;
    auto* gens = app.add_subcommand("generators", "print the rewritten corner system g1..g4");
    gens->add_option("curve", gen_file, "curve file")->required();

    std::string check_file;
    auto* ncheck = app.add_subcommand("newton-check", "verify the generators' Newton polytopes against the shape table");
    ncheck->add_option("curve", check_file, "curve file")->required();

    std::string solve_file;
    int budget = 625;
    bool no_rotate = false;
    auto* solve = app.add_subcommand("solve", "count inscribed squares by homotopy continuation");
    solve->add_option("curve", solve_file, "curve file")->required();
    solve->add_option("--budget", budget, "maximum number of paths to track");
    solve->add_flag("--no-rotate", no_rotate, "solve in the input coordinates, skipping the random rotation");

    std::string plot_file, plot_out = "squares.svg", xrange, yrange, from_report;
    int plot_budget = 625, grid = 256;
    bool plot_no_rotate = false;
    auto* plot = app.add_subcommand("plot", "solve and render an SVG of the curve and its real squares");
    plot->add_option("curve", plot_file, "curve file")->required();
    plot->add_option("--out", plot_out, "output SVG path");
    plot->add_option("--grid", grid, "marching-squares resolution")->check(CLI::Range(16, 4096));
    plot->add_option("--xrange", xrange, "viewport x as lo:hi");
    plot->add_option("--yrange", yrange, "viewport y as lo:hi");
    plot->add_option("--budget", plot_budget, "maximum number of paths to track");
    plot->add_flag("--no-rotate", plot_no_rotate,
                   "solve in the input coordinates, skipping the random rotation");
    plot->add_option("--from-report", from_report, "reuse a solve --json report instead of solving");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kOk : kUsage;
    }

    try {
        if (bound->parsed()) return cmd_bound(m, as_json);
        if (mixed->parsed()) return cmd_mixed_volume(m2, as_json);
        if (gens->parsed()) return cmd_generators(gen_file, as_json);
        if (ncheck->parsed()) return cmd_newton_check(check_file, as_json);

        if (solve->parsed()) {
            CurveF curve = load_curve_or_exit(solve_file);
            HomotopySettings settings;
            settings.seed = seed;
            settings.path_budget = budget;
            settings.rotate = !no_rotate;
            return run_solve(curve, settings, as_json, nullptr);
        }

        if (plot->parsed()) {
            CurveF curve = load_curve_or_exit(plot_file);
            RenderOptions opts;
            opts.grid = grid;
            if (xrange.empty() != yrange.empty()) {
                std::cerr << "error: --xrange and --yrange must be given together\n";
                return kUsage;
            }
            if (!xrange.empty()) {
                Viewport vp{};
                if (!parse_range(xrange, &vp.xmin, &vp.xmax) ||
                    !parse_range(yrange, &vp.ymin, &vp.ymax)) {
                    std::cerr << "error: ranges must look like '-2:2' with lo < hi\n";
                    return kUsage;
                }
                opts.window = vp;
            }
            SquareReport report;
            if (!from_report.empty()) {
                std::ifstream in(from_report);
                if (!in) {
                    std::cerr << "error: cannot open report " << from_report << "\n";
                    return kIo;
                }
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                try {
                    report = report_from_json(text);
                } catch (const std::exception& e) {
                    std::cerr << "error: bad report: " << e.what() << "\n";
                    return kParse;
                }
            } else {
                HomotopySettings settings;
                settings.seed = seed;
                settings.path_budget = plot_budget;
                settings.rotate = !plot_no_rotate;
                int rc = run_solve(curve, settings, false, &report);
                if (rc != kOk) return rc;
            }
            std::string svg = render_svg(curve, report, opts);
            std::ofstream out(plot_out, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << plot_out << "\n";
                return kIo;
            }
            out << svg;
            std::cout << "wrote " << plot_out << "\n";
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
