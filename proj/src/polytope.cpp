#include "squarepeg/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace squarepeg {

LatticePolytopeP LatticePolytopeP::p0(int64_t m) {
    if (m < 1) throw std::domain_error("P0 needs m >= 1");
    return {PolytopeKind::P0, m, 0, 0};
}

LatticePolytopeP LatticePolytopeP::p1(int64_t m, int64_t l) {
    if (!(0 < l && l < m)) throw std::domain_error("P1 needs 0 < l < m");
    return {PolytopeKind::P1, m, l, 0};
}

LatticePolytopeP LatticePolytopeP::p2(int64_t m, int64_t l, int64_t k) {
    if (!(0 < l && l < k && k < m)) throw std::domain_error("P2 needs 0 < l < k < m");
    return {PolytopeKind::P2, m, l, k};
}

std::vector<LatticePoint> LatticePolytopeP::vertices() const {
    switch (kind) {
        case PolytopeKind::P0:
            return {{0, 0, 0, 0}, {m, 0, 0, 0}, {0, m, 0, 0}, {0, 0, m, 0}, {0, 0, 0, m}};
        case PolytopeKind::P1:
            // Two parallel triangles x3 = l resp. x4 = l, each capped by the
            // apex where that coordinate reaches m.
            return {{0, 0, l, 0},     {m - l, 0, l, 0}, {0, m - l, l, 0}, {0, 0, m, 0},
                    {0, 0, 0, l},     {m - l, 0, 0, l}, {0, m - l, 0, l}, {0, 0, 0, m}};
        case PolytopeKind::P2:
        default:
            // The P1 pattern truncated at x3 + x4 = k on both wings.
            return {{0, 0, l, 0}, {m - l, 0, l, 0}, {0, m - l, l, 0},
                    {0, 0, k, 0}, {m - k, 0, k, 0}, {0, m - k, k, 0},
                    {0, 0, 0, l}, {m - l, 0, 0, l}, {0, m - l, 0, l},
                    {0, 0, 0, k}, {m - k, 0, 0, k}, {0, m - k, 0, k}};
    }
}

std::vector<LatticePolytopeP::Halfspace> LatticePolytopeP::halfspaces() const {
    std::vector<Halfspace> hs;
    for (int i = 0; i < 4; ++i) {
        Halfspace h{{0, 0, 0, 0}, 0};
        h.normal[static_cast<size_t>(i)] = -1; // x_i >= 0
        hs.push_back(h);
    }
    hs.push_back({{1, 1, 1, 1}, m});
    if (kind != PolytopeKind::P0) hs.push_back({{0, 0, -1, -1}, -l}); // x3+x4 >= l
    if (kind == PolytopeKind::P2) hs.push_back({{0, 0, 1, 1}, k});
    return hs;
}

std::string LatticePolytopeP::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case PolytopeKind::P0: out << "P0(" << m << ")"; break;
        case PolytopeKind::P1: out << "P1(" << m << "," << l << ")"; break;
        case PolytopeKind::P2: out << "P2(" << m << "," << l << "," << k << ")"; break;
    }
    return out.str();
}

LatticePolytopeP shape_of_generator(int i, int64_t m) {
    if (i < 1 || i > 4) throw std::invalid_argument("generator index must be 1..4");
    if (m < 4) throw std::domain_error("generator shape table starts at degree 4");
    bool even = m % 2 == 0;
    switch (i) {
        case 1: return even ? LatticePolytopeP::p1(m, 2) : LatticePolytopeP::p2(m, 2, m - 1);
        case 2:
        case 3: return even ? LatticePolytopeP::p2(m, 1, m - 1) : LatticePolytopeP::p1(m, 1);
        default: return LatticePolytopeP::p0(m);
    }
}

bool newton_matches(const RatPoly& p, const LatticePolytopeP& P) {
    if (p.nvars() != 4) throw std::invalid_argument("newton_matches expects a 4-variable polynomial");
    if (p.is_zero()) return false;
    auto hs = P.halfspaces();
    for (const auto& [e, c] : p.terms()) {
        for (const auto& h : hs) {
            int64_t lhs = 0;
            for (int i = 0; i < 4; ++i) lhs += h.normal[static_cast<size_t>(i)] * e[static_cast<size_t>(i)];
            if (lhs > h.rhs) return false;
        }
    }
    for (const auto& v : P.vertices()) {
        Exponent e{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
                   static_cast<int>(v[3])};
        if (p.coefficient(e) == 0) return false;
    }
    return true;
}

Rational simplex_volume(const Simplex4& s) {
    int64_t d[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) d[r][c] = s[static_cast<size_t>(r + 1)][static_cast<size_t>(c)] - s[0][static_cast<size_t>(c)];
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return d[r0][c0] * (d[r1][c1] * d[r2][c2] - d[r1][c2] * d[r2][c1]) -
               d[r0][c1] * (d[r1][c0] * d[r2][c2] - d[r1][c2] * d[r2][c0]) +
               d[r0][c2] * (d[r1][c0] * d[r2][c1] - d[r1][c1] * d[r2][c0]);
    };
    int64_t det = d[0][0] * det3(1, 2, 3, 1, 2, 3) - d[0][1] * det3(1, 2, 3, 0, 2, 3) +
                  d[0][2] * det3(1, 2, 3, 0, 1, 3) - d[0][3] * det3(1, 2, 3, 0, 1, 2);
    if (det < 0) det = -det;
    return Rational(det) / 24;
}

namespace {

// Affine rank of a set of lattice points (dimension of their affine hull).
int affine_rank(const std::vector<LatticePoint>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::array<Rational, 4>> rows;
    for (size_t i = 1; i < pts.size(); ++i) {
        std::array<Rational, 4> r;
        for (int c = 0; c < 4; ++c) r[static_cast<size_t>(c)] = Rational(pts[i][static_cast<size_t>(c)] - pts[0][static_cast<size_t>(c)]);
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            Rational f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] / rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int c = col; c < 4; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

using LabelSet = std::vector<int>; // sorted 0-based vertex labels

// Cone construction: pick the lowest-labeled vertex of the face, triangulate
// the facets it does not lie on, cone over them. Recurses on vertex label
// sets; face facets are the maximal proper intersections with the defining
// halfspaces.
void triangulate_face(const LabelSet& face, const std::vector<LatticePoint>& verts,
                      const std::vector<LatticePolytopeP::Halfspace>& hs,
                      std::vector<LabelSet>& out) {
    std::vector<LatticePoint> pts;
    for (int v : face) pts.push_back(verts[static_cast<size_t>(v)]);
    int dim = affine_rank(pts);
    if (static_cast<int>(face.size()) == dim + 1) {
        out.push_back(face);
        return;
    }
    int apex = face.front();
    // Candidate facets: tight sets of each halfspace, restricted to the face.
    std::vector<LabelSet> cands;
    for (const auto& h : hs) {
        LabelSet tight;
        for (int v : face) {
            int64_t lhs = 0;
            for (int i = 0; i < 4; ++i) lhs += h.normal[static_cast<size_t>(i)] * verts[static_cast<size_t>(v)][static_cast<size_t>(i)];
            if (lhs == h.rhs) tight.push_back(v);
        }
        if (tight.empty() || tight.size() == face.size()) continue;
        if (std::find(tight.begin(), tight.end(), apex) != tight.end()) continue;
        cands.push_back(std::move(tight));
    }
    // Keep the maximal ones; duplicates and strict subsets are lower faces.
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& g : cands) {
        bool maximal = true;
        for (const auto& other : cands) {
            if (&other == &g || other.size() <= g.size()) continue;
            if (std::includes(other.begin(), other.end(), g.begin(), g.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        std::vector<LabelSet> sub;
        triangulate_face(g, verts, hs, sub);
        for (auto& simp : sub) {
            simp.insert(simp.begin(), apex);
            out.push_back(std::move(simp));
        }
    }
}

} // namespace

std::vector<Simplex4> cohen_hickey_triangulation(const LatticePolytopeP& P) {
    if (P.kind == PolytopeKind::P2)
        throw std::invalid_argument("cohen_hickey_triangulation: P2 is not supported");
    auto verts = P.vertices();
    if (P.kind == PolytopeKind::P0)
        return {Simplex4{verts[0], verts[1], verts[2], verts[3], verts[4]}};
    LabelSet all(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<LabelSet> labelled;
    triangulate_face(all, verts, P.halfspaces(), labelled);
    std::vector<Simplex4> out;
    for (const auto& ls : labelled) {
        if (ls.size() != 5) throw std::logic_error("triangulation produced a non-simplex");
        Simplex4 s;
        for (size_t i = 0; i < 5; ++i) s[i] = verts[static_cast<size_t>(ls[i])];
        out.push_back(s);
    }
    return out;
}

Rational volume_p1(int64_t m, int64_t l) {
    if (!(0 <= l && l <= m)) throw std::domain_error("volume_p1 needs 0 <= l <= m");
    Rational d = Rational(m - l);
    return d * d * d * Rational(m + 3 * l) / 24;
}

Rational volume_p2(int64_t m, int64_t l, int64_t k) {
    if (!(0 <= l && l < k && k <= m)) throw std::domain_error("volume_p2 needs 0 <= l < k <= m");
    return volume_p1(m, l) - volume_p1(m, k);
}

MinkowskiParams minkowski_params(int64_t m) {
    if (m < 4) throw std::domain_error("minkowski_params needs m >= 4");
    auto lam = [](int i) { return RatPoly::variable(4, i); };
    RatPoly l1 = lam(0), l2 = lam(1), l3 = lam(2), l4 = lam(3);
    MinkowskiParams mp;
    bool even = m % 2 == 0;
    // Group the scaled summands by shape. The P1 slice always carries l = 2
    // when it comes from g1 and l = 1 when it comes from g2, g3; either way
    // the combined lower cut is 2*l1 + l2 + l3.
    mp.mu1 = even ? l1 : l2 + l3;
    mp.mu2 = even ? l2 + l3 : l1;
    int64_t p1_l = even ? 2 : 1;
    int64_t p2_l = even ? 1 : 2;
    mp.m_form = (l1 + l2 + l3 + l4).scaled(Rational(m));
    mp.l_form = mp.mu1.scaled(Rational(p1_l)) + mp.mu2.scaled(Rational(p2_l));
    mp.k_form = (mp.mu1 + l4).scaled(Rational(m)) + mp.mu2.scaled(Rational(m - 1));
    return mp;
}

RatPoly minkowski_volume_poly(int64_t m) {
    auto mp = minkowski_params(m);
    auto vol = [](const RatPoly& mf, const RatPoly& cut) {
        RatPoly d = mf - cut;
        return d * d * d * (mf + cut.scaled(3));
    };
    return (vol(mp.m_form, mp.l_form) - vol(mp.m_form, mp.k_form)).scaled(Rational(1, 24));
}

int64_t mixed_volume(int64_t m) {
    if (m < 1) throw std::domain_error("mixed_volume needs m >= 1");
    int64_t closed = m * m * m * m - 5 * m * m + 4 * m;
    if (m <= 3) return closed; // polytope route degenerates below degree 4
    Rational coeff = minkowski_volume_poly(m).coefficient(Exponent{1, 1, 1, 1});
    if (coeff != closed)
        throw std::logic_error("mixed volume expansion disagrees with the closed form");
    return closed;
}

int64_t inscribed_bound(int64_t m) {
    // Parameter tuples cover each square exactly 4 times.
    return mixed_volume(m) / 4;
}

namespace {

int64_t cross(const LatticePoint2& o, const LatticePoint2& a, const LatticePoint2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain, strict turns (collinear points dropped). Handles
// degenerate inputs: returns 1 point for a point, 2 for a segment.
std::vector<LatticePoint2> convex_hull(std::vector<LatticePoint2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<LatticePoint2> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool on_boundary(const std::vector<LatticePoint2>& hull, const LatticePoint2& p) {
    if (hull.size() == 1) return p == hull[0];
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& u = hull[i];
        const auto& v = hull[(i + 1) % hull.size()];
        if (cross(u, v, p) != 0) continue;
        int64_t dot = (p[0] - u[0]) * (v[0] - u[0]) + (p[1] - u[1]) * (v[1] - u[1]);
        int64_t len2 = (v[0] - u[0]) * (v[0] - u[0]) + (v[1] - u[1]) * (v[1] - u[1]);
        if (dot >= 0 && dot <= len2) return true;
    }
    return false;
}

Rational hull_area(const std::vector<LatticePoint2>& hull) {
    int64_t twice = 0;
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& u = hull[i];
        const auto& v = hull[(i + 1) % hull.size()];
        twice += u[0] * v[1] - u[1] * v[0];
    }
    if (twice < 0) twice = -twice;
    return Rational(twice) / 2;
}

std::vector<LatticePoint2> checked_hull(const std::vector<LatticePoint2>& poly,
                                        const char* which) {
    if (poly.empty()) throw std::invalid_argument(std::string(which) + ": empty polygon");
    auto hull = convex_hull(poly);
    for (const auto& p : poly)
        if (!on_boundary(hull, p))
            throw std::invalid_argument(std::string(which) + ": polygon is not convex");
    return hull;
}

} // namespace

Rational mixed_area_2d(const std::vector<LatticePoint2>& P, const std::vector<LatticePoint2>& Q) {
    auto hp = checked_hull(P, "mixed_area_2d: first argument");
    auto hq = checked_hull(Q, "mixed_area_2d: second argument");
    std::vector<LatticePoint2> sums;
    sums.reserve(hp.size() * hq.size());
    for (const auto& p : hp)
        for (const auto& q : hq) sums.push_back({p[0] + q[0], p[1] + q[1]});
    return hull_area(convex_hull(sums)) - hull_area(hp) - hull_area(hq);
}

} // namespace squarepeg
