#include "squarepeg/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

namespace squarepeg {

namespace {

constexpr int kMaxPow = 64;

using Mat4 = Eigen::Matrix<Cx, 4, 4>;
using EVec4 = Eigen::Matrix<Cx, 4, 1>;

EVec4 to_eigen(const Vec4c& v) { return EVec4(v[0], v[1], v[2], v[3]); }
Vec4c from_eigen(const EVec4& v) { return {v(0), v(1), v(2), v(3)}; }

double max_norm(const Vec4c& v) {
    double n = 0;
    for (const auto& c : v) n = std::max(n, std::abs(c));
    return n;
}

bool finite(const Vec4c& v) {
    for (const auto& c : v)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

struct Powers {
    std::array<std::array<Cx, kMaxPow + 1>, 4> p;
    Powers(const Vec4c& x, const std::array<int, 4>& maxexp) {
        for (int v = 0; v < 4; ++v) {
            p[static_cast<size_t>(v)][0] = Cx(1, 0);
            for (int k = 1; k <= maxexp[static_cast<size_t>(v)]; ++k)
                p[static_cast<size_t>(v)][static_cast<size_t>(k)] =
                    p[static_cast<size_t>(v)][static_cast<size_t>(k - 1)] * x[static_cast<size_t>(v)];
        }
    }
    Cx eval(const PolySystem4::Entry& ent) const {
        Cx acc(0, 0);
        for (const auto& t : ent.terms)
            acc += t.c * p[0][static_cast<size_t>(t.e[0])] * p[1][static_cast<size_t>(t.e[1])] *
                   p[2][static_cast<size_t>(t.e[2])] * p[3][static_cast<size_t>(t.e[3])];
        return acc;
    }
};

} // namespace

PolySystem4 PolySystem4::from_polys(const std::array<CxPoly, 4>& polys) {
    PolySystem4 s;
    for (int i = 0; i < 4; ++i) {
        const CxPoly& p = polys[static_cast<size_t>(i)];
        if (p.nvars() != 4)
            throw std::invalid_argument("PolySystem4 expects 4-variable polynomials");
        if (p.degree() > kMaxPow) throw std::invalid_argument("degree too large for solver");
        for (const auto& [e, c] : p.terms())
            s.eqs[static_cast<size_t>(i)].terms.push_back({{e[0], e[1], e[2], e[3]}, c});
        s.degrees[static_cast<size_t>(i)] = std::max(0, p.degree());
        for (int j = 0; j < 4; ++j) {
            CxPoly dp = p.derivative(j);
            for (const auto& [e, c] : dp.terms())
                s.jac[static_cast<size_t>(i)][static_cast<size_t>(j)].terms.push_back(
                    {{e[0], e[1], e[2], e[3]}, c});
        }
        for (const auto& [e, c] : p.terms())
            for (int v = 0; v < 4; ++v)
                s.maxexp[static_cast<size_t>(v)] = std::max(s.maxexp[static_cast<size_t>(v)], e[static_cast<size_t>(v)]);
    }
    return s;
}

Vec4c PolySystem4::eval(const Vec4c& x) const {
    Powers pw(x, maxexp);
    Vec4c r;
    for (int i = 0; i < 4; ++i) r[static_cast<size_t>(i)] = pw.eval(eqs[static_cast<size_t>(i)]);
    return r;
}

void PolySystem4::eval_with_jacobian(const Vec4c& x, Vec4c& value, std::array<Cx, 16>& J) const {
    Powers pw(x, maxexp);
    for (int i = 0; i < 4; ++i) {
        value[static_cast<size_t>(i)] = pw.eval(eqs[static_cast<size_t>(i)]);
        for (int j = 0; j < 4; ++j)
            J[static_cast<size_t>(i * 4 + j)] = pw.eval(jac[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
}

StartSystem total_degree_start(const std::array<int, 4>& degrees) {
    long long count = 1;
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("start system needs positive degrees");
        count *= d;
        if (count > 1'000'000) throw BudgetExceeded("start system would have over 1e6 points");
    }
    std::array<CxPoly, 4> polys;
    for (int i = 0; i < 4; ++i) {
        CxPoly p(4);
        Exponent e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = degrees[static_cast<size_t>(i)];
        p.add_term(e, Cx(1, 0));
        p.add_term(Exponent{0, 0, 0, 0}, Cx(-1, 0));
        polys[static_cast<size_t>(i)] = p;
    }
    StartSystem ss;
    ss.system = PolySystem4::from_polys(polys);
    ss.points.reserve(static_cast<size_t>(count));
    // Mixed-radix enumeration, last variable fastest: deterministic ordering.
    std::array<int, 4> j{0, 0, 0, 0};
    constexpr double tau = 6.283185307179586476925286766559;
    for (long long n = 0; n < count; ++n) {
        Vec4c x;
        for (int i = 0; i < 4; ++i)
            x[static_cast<size_t>(i)] = std::polar(1.0, tau * j[static_cast<size_t>(i)] / degrees[static_cast<size_t>(i)]);
        ss.points.push_back(x);
        for (int i = 3; i >= 0; --i) {
            if (++j[static_cast<size_t>(i)] < degrees[static_cast<size_t>(i)]) break;
            j[static_cast<size_t>(i)] = 0;
        }
    }
    return ss;
}

namespace {

// The homotopy H(x,t) = gamma*(1-t)*S(x) + t*F(x) and the pieces the tracker
// needs: dx/dt from Davidenko's equation and Newton corrections at fixed t.
struct Homotopy {
    const PolySystem4& F;
    const PolySystem4& S;
    Cx gamma;

    void eval(const Vec4c& x, double t, Vec4c& H, Mat4& Hx) const {
        Vec4c fv, sv;
        std::array<Cx, 16> fj, sj;
        F.eval_with_jacobian(x, fv, fj);
        S.eval_with_jacobian(x, sv, sj);
        Cx gs = gamma * (1.0 - t);
        for (int i = 0; i < 4; ++i) {
            H[static_cast<size_t>(i)] = gs * sv[static_cast<size_t>(i)] + t * fv[static_cast<size_t>(i)];
            for (int j = 0; j < 4; ++j)
                Hx(i, j) = gs * sj[static_cast<size_t>(i * 4 + j)] + t * fj[static_cast<size_t>(i * 4 + j)];
        }
    }

    // dx/dt = -Hx^{-1} Ht with Ht = F(x) - gamma*S(x).
    bool velocity(const Vec4c& x, double t, Vec4c& out) const {
        Vec4c fv, sv;
        std::array<Cx, 16> fj, sj;
        F.eval_with_jacobian(x, fv, fj);
        S.eval_with_jacobian(x, sv, sj);
        Mat4 Hx;
        EVec4 Ht;
        Cx gs = gamma * (1.0 - t);
        for (int i = 0; i < 4; ++i) {
            Ht(i) = fv[static_cast<size_t>(i)] - gamma * sv[static_cast<size_t>(i)];
            for (int j = 0; j < 4; ++j)
                Hx(i, j) = gs * sj[static_cast<size_t>(i * 4 + j)] + t * fj[static_cast<size_t>(i * 4 + j)];
        }
        EVec4 v = Hx.partialPivLu().solve(-Ht);
        out = from_eigen(v);
        return finite(out);
    }
};

// Newton iteration on the target system; reports the final residual and the
// contraction ratio of the last two steps, which separates regular endpoints
// (quadratic convergence) from singular ones.
void polish_endpoint(const PolySystem4& F, Vec4c& x, double& residual, double& contraction) {
    double prev_step = -1;
    contraction = 0;
    for (int iter = 0; iter < 20; ++iter) {
        Vec4c fv;
        std::array<Cx, 16> J;
        F.eval_with_jacobian(x, fv, J);
        residual = max_norm(fv);
        if (!std::isfinite(residual)) return;
        Mat4 Jm;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) Jm(i, j) = J[static_cast<size_t>(i * 4 + j)];
        EVec4 dx = Jm.partialPivLu().solve(-to_eigen(fv));
        Vec4c d = from_eigen(dx);
        if (!finite(d)) return;
        double step = max_norm(d);
        double scale = std::max(1.0, max_norm(x));
        if (prev_step >= 0 && prev_step > 0) contraction = step / prev_step;
        // The floor is well above machine epsilon: steps at a regular root
        // bottom out as rounding noise around 1e-14, and treating that noise
        // as slow contraction would misclassify the root as singular. A true
        // singular endpoint halves its steps from far away and never gets
        // down here within the iteration cap.
        if (step < 1e-13 * scale) {
            Vec4c fv2 = F.eval(x);
            residual = max_norm(fv2);
            return;
        }
        for (int i = 0; i < 4; ++i) x[static_cast<size_t>(i)] += d[static_cast<size_t>(i)];
        prev_step = step;
    }
    residual = max_norm(F.eval(x));
}

} // namespace

namespace {

void validate_settings(const HomotopySettings& s) {
    if (!(0 < s.min_step && s.min_step <= s.initial_step && s.initial_step <= 1.0))
        throw std::invalid_argument("need 0 < min step <= initial step <= 1");
    if (!(s.corrector_tol > 0 && s.endpoint_tol > 0 && s.dedup_tol > 0 &&
          s.degenerate_tol > 0 && s.reality_tol > 0))
        throw std::invalid_argument("tolerances must be positive");
}

} // namespace

PathResult track_path(const PolySystem4& target, const PolySystem4& start, const Vec4c& x0,
                      const HomotopySettings& settings) {
    validate_settings(settings);
    Homotopy hom{target, start, settings.gamma};
    PathResult res;
    Vec4c x = x0;
    double t = 0.0, dt = settings.initial_step;
    int good_steps = 0;

    while (t < 1.0) {
        if (++res.steps > settings.max_steps) {
            res.status = PathStatus::failed;
            return res;
        }
        double h = std::min(dt, 1.0 - t);

        // RK4 predictor on Davidenko's ODE.
        Vec4c k1, k2, k3, k4, xt;
        bool ok = hom.velocity(x, t, k1);
        auto advance = [&](const Vec4c& k, double frac) {
            for (int i = 0; i < 4; ++i) xt[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] + h * frac * k[static_cast<size_t>(i)];
        };
        if (ok) { advance(k1, 0.5); ok = hom.velocity(xt, t + h / 2, k2); }
        if (ok) { advance(k2, 0.5); ok = hom.velocity(xt, t + h / 2, k3); }
        if (ok) { advance(k3, 1.0); ok = hom.velocity(xt, t + h, k4); }

        Vec4c xp = x;
        if (ok) {
            for (int i = 0; i < 4; ++i)
                xp[static_cast<size_t>(i)] += h / 6.0 *
                    (k1[static_cast<size_t>(i)] + 2.0 * k2[static_cast<size_t>(i)] + 2.0 * k3[static_cast<size_t>(i)] + k4[static_cast<size_t>(i)]);
            ok = finite(xp);
        }

        // Newton corrector at t+h.
        if (ok) {
            bool converged = false;
            for (int iter = 0; iter < settings.max_corrector_iterations; ++iter) {
                Vec4c H;
                Mat4 Hx;
                hom.eval(xp, t + h, H, Hx);
                EVec4 dx = Hx.partialPivLu().solve(-to_eigen(H));
                Vec4c d = from_eigen(dx);
                if (!finite(d)) break;
                for (int i = 0; i < 4; ++i) xp[static_cast<size_t>(i)] += d[static_cast<size_t>(i)];
                if (max_norm(d) < settings.corrector_tol * std::max(1.0, max_norm(xp))) {
                    converged = true;
                    break;
                }
            }
            ok = converged && finite(xp);
        }

        if (ok) {
            x = xp;
            t += h;
            if (max_norm(x) > settings.divergence_norm) {
                res.status = PathStatus::diverged;
                res.x = x;
                return res;
            }
            if (++good_steps >= 4) {
                dt = std::min(dt * 2.0, 0.1);
                good_steps = 0;
            }
        } else {
            good_steps = 0;
            dt *= 0.5;
            if (dt < settings.min_step) {
                // Stalled. Close enough to the end to hand over to the
                // endpoint polish; anything earlier is a genuine failure.
                if (t > 0.99) break;
                res.status = PathStatus::failed;
                res.x = x;
                return res;
            }
        }
    }

    polish_endpoint(target, x, res.residual, res.contraction);
    res.x = x;
    if (!finite(x) || max_norm(x) > settings.divergence_norm) {
        res.status = PathStatus::diverged;
        return res;
    }
    if (res.residual < settings.endpoint_tol && res.contraction < 0.5) {
        res.status = PathStatus::regular;
    } else if (res.residual < std::sqrt(settings.endpoint_tol)) {
        res.status = PathStatus::singular;
    } else {
        res.status = PathStatus::failed;
    }
    return res;
}

namespace {

struct Endpoint {
    SquareParam p;
    PathStatus status;
    double residual;
    size_t path_index;
};

double param_distance(const SquareParam& u, const SquareParam& v) {
    double d = 0;
    d = std::max(d, std::abs(u.a - v.a));
    d = std::max(d, std::abs(u.b - v.b));
    d = std::max(d, std::abs(u.c - v.c));
    d = std::max(d, std::abs(u.d - v.d));
    return d;
}

auto param_key(const SquareParam& s) {
    return std::make_tuple(s.c.real(), s.c.imag(), s.d.real(), s.d.imag(), s.a.real(),
                           s.a.imag(), s.b.real(), s.b.imag());
}

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(size_t i, size_t j) { parent[find(i)] = find(j); }
};

// Exact rotation data drawn from the seed: a Pythagorean direction and a
// small dyadic shift, so the transformed curve stays exact.
struct RotationChoice {
    Rational cos_t, sin_t;
    std::array<Rational, 2> shift;
};

RotationChoice draw_rotation(std::mt19937_64& rng) {
    static const std::array<std::array<int64_t, 3>, 6> triples = {{
        {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}, {9, 40, 41},
    }};
    const auto& tr = triples[static_cast<size_t>(rng() % triples.size())];
    bool swap_legs = rng() % 2 == 1;
    int64_t p = swap_legs ? tr[1] : tr[0];
    int64_t q = swap_legs ? tr[0] : tr[1];
    int sp = rng() % 2 == 1 ? -1 : 1;
    int sq = rng() % 2 == 1 ? -1 : 1;
    RotationChoice rc;
    rc.cos_t = Rational(sp * p, tr[2]);
    rc.sin_t = Rational(sq * q, tr[2]);
    for (int i = 0; i < 2; ++i)
        rc.shift[static_cast<size_t>(i)] = Rational(static_cast<int64_t>(rng() % 33) - 16, 8);
    return rc;
}

} // namespace

SquareReport count_inscribed_squares(const CurveF& curve, const HomotopySettings& settings) {
    validate_settings(settings);
    SquareReport report;
    report.degree = curve.m;
    if (curve.m < 1) {
        report.warnings.push_back("curve is constant: nothing to inscribe");
        return report;
    }

    std::mt19937_64 rng(settings.seed);
    HomotopySettings s = settings;
    s.gamma = std::polar(1.0, 6.283185307179586 * (static_cast<double>(rng() >> 11) / 9007199254740992.0));

    CurveF solved = curve;
    RotationChoice rc;
    bool rotated = false;
    if (settings.rotate) {
        rc = draw_rotation(rng);
        solved = transform_curve(curve, rc.cos_t, rc.sin_t, rc.shift);
        rotated = true;
    }

    CornerSystem cs = rewritten_generators(solved);
    for (int i = 0; i < 4; ++i) {
        if (cs.g[static_cast<size_t>(i)].is_zero()) {
            report.warnings.push_back(
                "generator g" + std::to_string(i + 1) +
                " vanishes identically: the curve carries a positive-dimensional family of "
                "squares, no isolated count exists; no paths tracked");
            return report;
        }
    }

    // Normalize each equation to unit max coefficient so residual tolerances
    // are relative to the input scale.
    std::array<CxPoly, 4> numeric;
    for (int i = 0; i < 4; ++i) {
        CxPoly p = to_complex(cs.g[static_cast<size_t>(i)]);
        double mx = 0;
        for (const auto& [e, c] : p.terms()) mx = std::max(mx, std::abs(c));
        numeric[static_cast<size_t>(i)] = p.scaled(Cx(1.0 / mx, 0));
    }
    PolySystem4 target = PolySystem4::from_polys(numeric);

    long long n_paths = 1;
    for (int d : target.degrees) n_paths *= d;
    if (n_paths > s.path_budget) {
        std::ostringstream msg;
        msg << "run needs " << n_paths << " paths but the budget is " << s.path_budget
            << "; raise it explicitly to proceed";
        throw BudgetExceeded(msg.str());
    }
    report.n_paths = static_cast<int>(n_paths);

    StartSystem ss = total_degree_start(target.degrees);
    std::vector<PathResult> results(ss.points.size());
    unsigned hw = std::thread::hardware_concurrency();
    size_t n_threads = std::min<size_t>(std::max(1u, hw), ss.points.size());
    if (n_threads <= 1) {
        for (size_t i = 0; i < ss.points.size(); ++i)
            results[i] = track_path(target, ss.system, ss.points[i], s);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < ss.points.size(); i = next.fetch_add(1))
                results[i] = track_path(target, ss.system, ss.points[i], s);
        };
        std::vector<std::thread> pool;
        for (size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    size_t all_failed = 0;
    for (const auto& r : results)
        if (r.status == PathStatus::failed) ++all_failed;
    if (!results.empty() && all_failed == results.size())
        throw std::runtime_error("every tracked path failed; the homotopy never reached t = 1");

    // Classify endpoints, mapping back to the input coordinates if the curve
    // was rotated: centers move by the full affine map, offsets only rotate.
    double cos_d = rotated ? to_double(rc.cos_t) : 1.0;
    double sin_d = rotated ? to_double(rc.sin_t) : 0.0;
    double tx = rotated ? to_double(rc.shift[0]) : 0.0;
    double ty = rotated ? to_double(rc.shift[1]) : 0.0;
    std::vector<Endpoint> finite_pts;
    int n_singular_nondegenerate = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        switch (r.status) {
            case PathStatus::diverged: ++report.n_diverged; continue;
            case PathStatus::failed: ++report.n_failed; continue;
            default: break;
        }
        ++report.n_finite;
        SquareParam p;
        p.a = cos_d * r.x[0] - sin_d * r.x[1] + tx;
        p.b = sin_d * r.x[0] + cos_d * r.x[1] + ty;
        p.c = cos_d * r.x[2] - sin_d * r.x[3];
        p.d = sin_d * r.x[2] + cos_d * r.x[3];
        if (is_degenerate(p, s.degenerate_tol)) continue;
        if (r.status == PathStatus::singular) ++n_singular_nondegenerate;
        finite_pts.push_back({p, r.status, r.residual, i});
    }

    if (n_singular_nondegenerate * 20 > report.n_paths) {
        std::ostringstream msg;
        msg << n_singular_nondegenerate << " of " << report.n_paths
            << " paths end at singular points away from the point-square locus: "
               "suspected positive-dimensional family of squares";
        report.warnings.push_back(msg.str());
    }

    // Dedup endpoints into distinct solutions.
    UnionFind uf(finite_pts.size());
    for (size_t i = 0; i < finite_pts.size(); ++i)
        for (size_t j = i + 1; j < finite_pts.size(); ++j)
            if (param_distance(finite_pts[i].p, finite_pts[j].p) < s.dedup_tol) uf.unite(i, j);
    std::vector<std::vector<size_t>> clusters;
    {
        std::vector<long> cluster_of(finite_pts.size(), -1);
        for (size_t i = 0; i < finite_pts.size(); ++i) {
            size_t root = uf.find(i);
            if (cluster_of[root] < 0) {
                cluster_of[root] = static_cast<long>(clusters.size());
                clusters.emplace_back();
            }
            clusters[static_cast<size_t>(cluster_of[root])].push_back(i);
        }
    }
    report.n_nondegenerate = static_cast<int>(clusters.size());

    // Pick per-cluster representatives (best residual, ties by path order).
    struct Cluster {
        SquareParam rep;
        double residual;
        int size;
    };
    std::vector<Cluster> reps;
    for (const auto& members : clusters) {
        size_t best = members.front();
        for (size_t idx : members)
            if (finite_pts[idx].residual < finite_pts[best].residual) best = idx;
        reps.push_back({finite_pts[best].p, finite_pts[best].residual,
                        static_cast<int>(members.size())});
    }

    // Group clusters into orbits: two solutions describe the same square when
    // some orbit image of one lands on the other.
    UnionFind og(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) {
        auto imgs = orbit(reps[i].rep);
        for (size_t j = i + 1; j < reps.size(); ++j)
            for (const auto& im : imgs)
                if (param_distance(im, reps[j].rep) < s.dedup_tol) {
                    og.unite(i, j);
                    break;
                }
    }
    std::vector<std::vector<size_t>> orbit_classes;
    {
        std::vector<long> class_of(reps.size(), -1);
        for (size_t i = 0; i < reps.size(); ++i) {
            size_t root = og.find(i);
            if (class_of[root] < 0) {
                class_of[root] = static_cast<long>(orbit_classes.size());
                orbit_classes.emplace_back();
            }
            orbit_classes[static_cast<size_t>(class_of[root])].push_back(i);
        }
    }

    double fnorm = 0;
    for (const auto& [e, c] : curve.f.terms()) fnorm = std::max(fnorm, std::abs(to_double(c)));
    for (const auto& members : orbit_classes) {
        ReportedSquare sq;
        sq.residual = reps[members.front()].residual;
        bool first = true;
        for (size_t idx : members) {
            SquareParam cand = canonicalize(reps[idx].rep);
            if (first || param_key(cand) > param_key(sq.param)) sq.param = cand;
            first = false;
            sq.multiplicity = std::max(sq.multiplicity, reps[idx].size);
            sq.residual = std::min(sq.residual, reps[idx].residual);
        }
        double im = 0;
        im = std::max(im, std::abs(sq.param.a.imag()));
        im = std::max(im, std::abs(sq.param.b.imag()));
        im = std::max(im, std::abs(sq.param.c.imag()));
        im = std::max(im, std::abs(sq.param.d.imag()));
        sq.real = im < s.reality_tol;
        double cres = 0;
        for (const auto& corner : corners(sq.param)) {
            Cx v = curve.f.evaluate<Cx>({corner[0], corner[1]});
            cres = std::max(cres, std::abs(v));
        }
        sq.corner_residual = cres / fnorm;
        report.squares.push_back(sq);
    }
    std::sort(report.squares.begin(), report.squares.end(),
              [](const ReportedSquare& a, const ReportedSquare& b) {
                  return param_key(a.param) > param_key(b.param);
              });
    report.n_orbits = static_cast<int>(report.squares.size());
    int n_bad_residual = 0;
    for (const auto& sq : report.squares) {
        if (sq.real) ++report.n_real_squares;
        if (sq.corner_residual > 1e-8) ++n_bad_residual;
    }
    if (n_bad_residual > 0) {
        std::ostringstream msg;
        msg << n_bad_residual << " reported square(s) exceed the curve residual tolerance";
        report.warnings.push_back(msg.str());
    }
    return report;
}

std::vector<RenderSquare> reality_and_render_data(const SquareReport& report) {
    std::vector<RenderSquare> out;
    for (const auto& sq : report.squares) {
        if (!sq.real) continue;
        double a = sq.param.a.real(), b = sq.param.b.real();
        double c = sq.param.c.real(), d = sq.param.d.real();
        RenderSquare rs;
        rs.corners = {{{a + c, b + d}, {a - d, b + c}, {a - c, b - d}, {a + d, b - c}}};
        rs.real = true;
        out.push_back(rs);
    }
    return out;
}

} // namespace squarepeg
