#pragma once

// Numerical counting of inscribed squares by total-degree homotopy
// continuation. The corner system g1..g4 is tracked from the roots of
// x_i^{d_i} - 1 along H(x,t) = gamma*(1-t)*start + t*target with an RK4
// predictor and Newton corrector, endpoints are Newton-polished, filtered
// (degenerate, duplicate), grouped into 4-element orbits, and flagged real.

#include "squarepeg/curve.hpp"
#include "squarepeg/squares.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace squarepeg {

// Thrown when a run would track more paths than the configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cx = std::complex<double>;
using Vec4c = std::array<Cx, 4>;

// Flattened numeric square system: fast to evaluate, carries its Jacobian.
struct PolySystem4 {
    struct Term {
        std::array<int, 4> e;
        Cx c;
    };
    struct Entry {
        std::vector<Term> terms;
    };
    std::array<Entry, 4> eqs;
    std::array<std::array<Entry, 4>, 4> jac; // jac[i][j] = d eqs[i] / d x_j
    std::array<int, 4> degrees{};
    std::array<int, 4> maxexp{}; // per-variable power table size

    static PolySystem4 from_polys(const std::array<CxPoly, 4>& polys);

    Vec4c eval(const Vec4c& x) const;
    // Value and Jacobian in one pass; J is row-major 4x4.
    void eval_with_jacobian(const Vec4c& x, Vec4c& value, std::array<Cx, 16>& J) const;
};

// Start system x_i^{d_i} - 1 together with its prod(d_i) roots-of-unity
// start points, ordered by mixed-radix index for determinism.
struct StartSystem {
    PolySystem4 system;
    std::vector<Vec4c> points;
};
StartSystem total_degree_start(const std::array<int, 4>& degrees);

struct HomotopySettings {
    Cx gamma{0.64872436, 0.76101172}; // overridden from seed by the driver
    double initial_step = 0.05;
    double min_step = 1e-10;
    double corrector_tol = 1e-10;
    int max_corrector_iterations = 3;
    int max_steps = 5000;
    double endpoint_tol = 1e-8;   // residual defining a converged endpoint
    double dedup_tol = 1e-6;      // endpoint clustering distance
    double degenerate_tol = 1e-8; // |c| + |d| below this is a point square
    double reality_tol = 1e-6;    // max imaginary part of a real square
    double divergence_norm = 1e10;
    uint64_t seed = 0;
    int path_budget = 625; // refuse runs with more start points than this
    bool rotate = true;    // random rational rotation before solving
};

enum class PathStatus { regular, singular, diverged, failed };

struct PathResult {
    PathStatus status = PathStatus::failed;
    Vec4c x{};          // endpoint, meaningful for regular/singular
    double residual = 0;   // max |g_i(x)| on the (normalized) system
    double contraction = 0; // last Newton contraction rate at the endpoint
    int steps = 0;
};

PathResult track_path(const PolySystem4& target, const PolySystem4& start,
                      const Vec4c& x0, const HomotopySettings& settings);

struct ReportedSquare {
    SquareParam param;    // canonical orbit representative
    bool real = false;
    int multiplicity = 1; // endpoint cluster size (paths per distinct point)
    double residual = 0;  // endpoint residual on the solved system
    double corner_residual = 0; // max |f(corner)| / |f|_inf on the input curve
};

struct SquareReport {
    int degree = 0;
    int n_paths = 0;
    int n_finite = 0;        // endpoints with status regular or singular
    int n_diverged = 0;
    int n_failed = 0;
    int n_nondegenerate = 0; // distinct non-point solutions after dedup
    int n_orbits = 0;        // = squares.size()
    int n_real_squares = 0;
    std::vector<ReportedSquare> squares;
    std::vector<std::string> warnings;
};

// End-to-end driver. Budget, rotation, tolerances and seed come from the
// settings; the curve is solved exactly as given when settings.rotate is off.
SquareReport count_inscribed_squares(const CurveF& curve, const HomotopySettings& settings);

// Corner quadruples of the real squares, in the drawing order
// (a+c,b+d), (a-d,b+c), (a-c,b-d), (a+d,b-c) that traces the boundary.
struct RenderSquare {
    std::array<std::array<double, 2>, 4> corners;
    bool real = true;
};
std::vector<RenderSquare> reality_and_render_data(const SquareReport& report);

} // namespace squarepeg
