#pragma once

// SVG plots: the curve as a marching-squares contour, the real inscribed
// squares as colored polygons, and a caption with the square count. Output is
// deterministic byte-for-byte for fixed inputs (fixed-precision formatting,
// no timestamps).

#include "squarepeg/curve.hpp"
#include "squarepeg/solver.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace squarepeg {

struct Viewport {
    double xmin, xmax, ymin, ymax;
};

struct RenderOptions {
    std::optional<Viewport> window; // unset: fit to squares and curve samples
    int grid = 256;                 // marching-squares resolution, >= 16
};

// One contour line segment in curve coordinates.
struct Segment2 {
    double x0, y0, x1, y1;
};

// Marching squares on an (n+1)^2 sample lattice over the viewport, with
// linear interpolation along cell edges. Ambiguous saddle cells are split by
// the cell-center sign.
std::vector<Segment2> marching_squares(const CurveF& curve, const Viewport& vp, int n);

// Integer-bounds window enclosing the real squares and a coarse sample of the
// curve's zero set, padded by one unit on every side.
Viewport auto_viewport(const CurveF& curve, const std::vector<RenderSquare>& squares);

std::string render_svg(const CurveF& curve, const SquareReport& report,
                       const RenderOptions& options);

} // namespace squarepeg
