#include "squarepeg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace squarepeg {

namespace {

double eval_curve(const CurveF& curve, double x, double y) {
    return curve.f.evaluate<double>({x, y});
}

std::string fmt(double v) {
    char buf[48];
    // Flush negative zero so output bytes do not depend on rounding direction.
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::vector<Segment2> marching_squares(const CurveF& curve, const Viewport& vp, int n) {
    if (n < 16) throw std::invalid_argument("marching squares grid must be at least 16");
    if (!(vp.xmax > vp.xmin && vp.ymax > vp.ymin))
        throw std::invalid_argument("empty viewport");
    size_t nn = static_cast<size_t>(n);
    double hx = (vp.xmax - vp.xmin) / n, hy = (vp.ymax - vp.ymin) / n;
    std::vector<double> val((nn + 1) * (nn + 1));
    auto at = [&](size_t i, size_t j) -> double& { return val[j * (nn + 1) + i]; };
    for (size_t j = 0; j <= nn; ++j)
        for (size_t i = 0; i <= nn; ++i)
            at(i, j) = eval_curve(curve, vp.xmin + hx * static_cast<double>(i),
                                  vp.ymin + hy * static_cast<double>(j));

    std::vector<Segment2> segs;
    for (size_t j = 0; j < nn; ++j) {
        for (size_t i = 0; i < nn; ++i) {
            double x0 = vp.xmin + hx * static_cast<double>(i);
            double y0 = vp.ymin + hy * static_cast<double>(j);
            // Corners counterclockwise from bottom-left, edges 0..3 between
            // consecutive corners (bottom, right, top, left).
            double f[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            double cx[4] = {x0, x0 + hx, x0 + hx, x0};
            double cy[4] = {y0, y0, y0 + hy, y0 + hy};
            int mask = 0;
            for (int k = 0; k < 4; ++k)
                if (f[k] < 0) mask |= 1 << k;
            if (mask == 0 || mask == 15) continue;

            auto edge_point = [&](int e, double* px, double* py) {
                int a = e, b = (e + 1) % 4;
                double t = f[a] / (f[a] - f[b]);
                *px = cx[a] + t * (cx[b] - cx[a]);
                *py = cy[a] + t * (cy[b] - cy[a]);
            };
            auto emit = [&](int ea, int eb) {
                Segment2 s;
                edge_point(ea, &s.x0, &s.y0);
                edge_point(eb, &s.x1, &s.y1);
                segs.push_back(s);
            };

            switch (mask) {
                case 1: case 14: emit(3, 0); break;
                case 2: case 13: emit(0, 1); break;
                case 4: case 11: emit(1, 2); break;
                case 8: case 7: emit(2, 3); break;
                case 3: case 12: emit(3, 1); break;
                case 6: case 9: emit(0, 2); break;
                case 5: case 10: {
                    // Saddle: split by the sign at the cell center.
                    double fc = eval_curve(curve, x0 + hx / 2, y0 + hy / 2);
                    bool inside = fc < 0;
                    bool low_pair = (mask == 5) == inside;
                    if (low_pair) {
                        emit(0, 1);
                        emit(2, 3);
                    } else {
                        emit(3, 0);
                        emit(1, 2);
                    }
                    break;
                }
                default: break;
            }
        }
    }
    return segs;
}

Viewport auto_viewport(const CurveF& curve, const std::vector<RenderSquare>& squares) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool have = false;
    auto add = [&](double x, double y) {
        if (!have) {
            lo_x = hi_x = x;
            lo_y = hi_y = y;
            have = true;
        } else {
            lo_x = std::min(lo_x, x); hi_x = std::max(hi_x, x);
            lo_y = std::min(lo_y, y); hi_y = std::max(hi_y, y);
        }
    };
    for (const auto& sq : squares)
        for (const auto& c : sq.corners) add(c[0], c[1]);

    // Coarse probe for points of the zero set: sign changes between adjacent
    // samples. The probe box covers the squares and a default neighborhood of
    // the origin.
    double px0 = -4, px1 = 4, py0 = -4, py1 = 4;
    if (have) {
        px0 = std::min(px0, lo_x - 1);
        px1 = std::max(px1, hi_x + 1);
        py0 = std::min(py0, lo_y - 1);
        py1 = std::max(py1, hi_y + 1);
    }
    const int pn = 128;
    std::vector<double> row(pn + 1), prev(pn + 1);
    for (int j = 0; j <= pn; ++j) {
        double y = py0 + (py1 - py0) * j / pn;
        for (int i = 0; i <= pn; ++i) {
            double x = px0 + (px1 - px0) * i / pn;
            row[static_cast<size_t>(i)] = eval_curve(curve, x, y);
            // A zero exactly at a sample counts once; otherwise a strict sign
            // change marks the sample just past the zero.
            bool crossing = row[static_cast<size_t>(i)] == 0.0 ||
                            (i > 0 && row[static_cast<size_t>(i)] * row[static_cast<size_t>(i - 1)] < 0) ||
                            (j > 0 && row[static_cast<size_t>(i)] * prev[static_cast<size_t>(i)] < 0);
            if (crossing) add(x, y);
        }
        std::swap(row, prev);
    }

    if (!have) return {-2, 2, -2, 2};
    return {std::floor(lo_x) - 1, std::ceil(hi_x) + 1, std::floor(lo_y) - 1, std::ceil(hi_y) + 1};
}

std::string render_svg(const CurveF& curve, const SquareReport& report,
                       const RenderOptions& options) {
    static const char* kPalette[] = {"navy", "orange", "plum",  "cyan",    "blue",
                                     "green", "black",  "maroon", "gold",  "brown",
                                     "pink",  "coral",  "magenta", "khaki"};
    auto squares = reality_and_render_data(report);
    Viewport vp = options.window ? *options.window : auto_viewport(curve, squares);
    int grid = std::max(16, options.grid);
    auto segs = marching_squares(curve, vp, grid);

    const double W = 720;
    double H = W * (vp.ymax - vp.ymin) / (vp.xmax - vp.xmin);
    const double caption_h = 44;
    auto sx = [&](double x) { return (x - vp.xmin) / (vp.xmax - vp.xmin) * W; };
    auto sy = [&](double y) { return (vp.ymax - y) / (vp.ymax - vp.ymin) * H; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
        << fmt(H + caption_h) << "\" viewBox=\"0 0 " << fmt(W) << " " << fmt(H + caption_h)
        << "\">\n";
    out << "<rect width=\"" << fmt(W) << "\" height=\"" << fmt(H + caption_h)
        << "\" fill=\"white\"/>\n";

    if (!segs.empty()) {
        out << "<path fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" d=\"";
        for (const auto& s : segs)
            out << "M" << fmt(sx(s.x0)) << " " << fmt(sy(s.y0)) << "L" << fmt(sx(s.x1)) << " "
                << fmt(sy(s.y1));
        out << "\"/>\n";
    }

    size_t color = 0;
    for (const auto& sq : squares) {
        out << "<polygon fill=\"none\" stroke=\"" << kPalette[color % 14]
            << "\" stroke-width=\"2\" points=\"";
        for (size_t i = 0; i < 4; ++i) {
            if (i) out << " ";
            out << fmt(sx(sq.corners[i][0])) << "," << fmt(sy(sq.corners[i][1]));
        }
        out << "\"/>\n";
        ++color;
    }

    std::string name = curve_to_string(curve);
    if (name.size() > 60) name = "degree-" + std::to_string(curve.m) + " curve";
    out << "<text x=\"" << fmt(W / 2) << "\" y=\"" << fmt(H + 28)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << name
        << " = 0 inscribing " << squares.size() << (squares.size() == 1 ? " square" : " squares")
        << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace squarepeg
