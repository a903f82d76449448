#include "squarepeg/polytope.hpp"
#include "squarepeg/squares.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace squarepeg;
using sqt::make2;

namespace {

int64_t dot4(const std::array<int64_t, 4>& n, const LatticePoint& v) {
    return n[0] * v[0] + n[1] * v[1] + n[2] * v[2] + n[3] * v[3];
}

// Support function from the vertex list.
int64_t support(const LatticePolytopeP& P, const std::array<int64_t, 4>& w) {
    int64_t best = 0;
    bool first = true;
    for (const auto& v : P.vertices()) {
        int64_t s = dot4(w, v);
        if (first || s > best) best = s;
        first = false;
    }
    return best;
}

CurveF dense_curve(int m) {
    const Rational M(1000003);
    RatPoly f(2);
    Rational c(1);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) {
            c *= M;
            f.add_term(Exponent{i, j, 0, 0}, c);
        }
    return make_curve(std::move(f));
}

} // namespace

TEST_CASE("polytope constructors enforce parameter ranges") {
    CHECK_THROWS_AS(LatticePolytopeP::p0(0), std::domain_error);
    CHECK_THROWS_AS(LatticePolytopeP::p1(4, 0), std::domain_error);
    CHECK_THROWS_AS(LatticePolytopeP::p1(4, 4), std::domain_error);
    CHECK_THROWS_AS(LatticePolytopeP::p2(4, 0, 3), std::domain_error);
    CHECK_THROWS_AS(LatticePolytopeP::p2(4, 2, 2), std::domain_error);
    CHECK_THROWS_AS(LatticePolytopeP::p2(4, 3, 4), std::domain_error);

    CHECK(LatticePolytopeP::p0(4).to_string() == "P0(4)");
    CHECK(LatticePolytopeP::p1(4, 2).to_string() == "P1(4,2)");
    CHECK(LatticePolytopeP::p2(5, 2, 4).to_string() == "P2(5,2,4)");
}

TEST_CASE("vertex lists are the expected frozen matrices") {
    auto p0 = LatticePolytopeP::p0(4);
    std::vector<LatticePoint> v0 = {{0, 0, 0, 0}, {4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}};
    CHECK(p0.vertices() == v0);

    auto p1 = LatticePolytopeP::p1(4, 2);
    std::vector<LatticePoint> v1 = {{0, 0, 2, 0}, {2, 0, 2, 0}, {0, 2, 2, 0}, {0, 0, 4, 0},
                                    {0, 0, 0, 2}, {2, 0, 0, 2}, {0, 2, 0, 2}, {0, 0, 0, 4}};
    CHECK(p1.vertices() == v1);

    auto p2 = LatticePolytopeP::p2(4, 1, 3);
    std::vector<LatticePoint> v2 = {{0, 0, 1, 0}, {3, 0, 1, 0}, {0, 3, 1, 0},
                                    {0, 0, 3, 0}, {1, 0, 3, 0}, {0, 1, 3, 0},
                                    {0, 0, 0, 1}, {3, 0, 0, 1}, {0, 3, 0, 1},
                                    {0, 0, 0, 3}, {1, 0, 0, 3}, {0, 1, 0, 3}};
    CHECK(p2.vertices() == v2);
}

TEST_CASE("vertices satisfy every halfspace and facets are supported") {
    for (const auto& P : {LatticePolytopeP::p0(5), LatticePolytopeP::p1(6, 2),
                          LatticePolytopeP::p2(7, 2, 6)}) {
        auto hs = P.halfspaces();
        auto vs = P.vertices();
        for (const auto& h : hs) {
            int tight = 0;
            int64_t best = dot4(h.normal, vs[0]);
            for (const auto& v : vs) {
                int64_t lhs = dot4(h.normal, v);
                CHECK(lhs <= h.rhs);
                best = std::max(best, lhs);
                if (lhs == h.rhs) ++tight;
            }
            // Every inequality is attained (it is a facet, not slack)...
            CHECK(best == h.rhs);
            // ...and a facet of a 4-polytope carries at least 4 vertices.
            CHECK(tight >= 4);
        }
        // Each vertex lies on at least 4 facets.
        for (const auto& v : vs) {
            int on = 0;
            for (const auto& h : hs)
                if (dot4(h.normal, v) == h.rhs) ++on;
            CHECK(on >= 4);
        }
    }
}

TEST_CASE("generator shapes alternate with parity") {
    auto same = [](const LatticePolytopeP& a, const LatticePolytopeP& b) {
        return a.kind == b.kind && a.m == b.m && a.l == b.l && a.k == b.k;
    };
    CHECK(same(shape_of_generator(1, 4), LatticePolytopeP::p1(4, 2)));
    CHECK(same(shape_of_generator(2, 4), LatticePolytopeP::p2(4, 1, 3)));
    CHECK(same(shape_of_generator(3, 4), LatticePolytopeP::p2(4, 1, 3)));
    CHECK(same(shape_of_generator(4, 4), LatticePolytopeP::p0(4)));

    CHECK(same(shape_of_generator(1, 5), LatticePolytopeP::p2(5, 2, 4)));
    CHECK(same(shape_of_generator(2, 5), LatticePolytopeP::p1(5, 1)));
    CHECK(same(shape_of_generator(3, 5), LatticePolytopeP::p1(5, 1)));
    CHECK(same(shape_of_generator(4, 5), LatticePolytopeP::p0(5)));

    CHECK_THROWS_AS(shape_of_generator(1, 3), std::domain_error);
    CHECK_THROWS_AS(shape_of_generator(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(shape_of_generator(5, 4), std::invalid_argument);
}

TEST_CASE("generic generators have exactly the claimed Newton polytopes") {
    for (int m : {4, 5, 6, 7}) {
        CurveF curve = dense_curve(m);
        CornerSystem cs = rewritten_generators(curve);
        for (int i = 1; i <= 4; ++i)
            CHECK(newton_matches(cs.g[static_cast<size_t>(i - 1)], shape_of_generator(i, m)));
    }
}

TEST_CASE("newton_matches rejects mismatches") {
    CurveF curve = dense_curve(4);
    CornerSystem cs = rewritten_generators(curve);

    // Wrong shape for the generator.
    CHECK(!newton_matches(cs.g[0], shape_of_generator(2, 4)));
    CHECK(!newton_matches(cs.g[3], LatticePolytopeP::p0(5))); // vertices absent

    // A term outside the polytope: constant violates the lower cut of P1(4,2).
    RatPoly spoiled = cs.g[0] + RatPoly::constant(4, Rational(1));
    CHECK(!newton_matches(spoiled, shape_of_generator(1, 4)));

    CHECK(!newton_matches(RatPoly(4), LatticePolytopeP::p0(4))); // zero poly
    CHECK_THROWS_AS(newton_matches(RatPoly(2), LatticePolytopeP::p0(4)), std::invalid_argument);
}

TEST_CASE("simplex volume basics") {
    Simplex4 unit = {LatticePoint{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(simplex_volume(unit) == Rational(1, 24));

    Simplex4 scaled = unit;
    for (auto& v : scaled)
        for (auto& c : v) c *= 3;
    CHECK(simplex_volume(scaled) == Rational(81, 24));

    Simplex4 flat = {LatticePoint{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(simplex_volume(flat) == Rational(0));
}

TEST_CASE("triangulation of the simplex and the one-cut shape") {
    auto p0 = LatticePolytopeP::p0(6);
    auto t0 = cohen_hickey_triangulation(p0);
    REQUIRE(t0.size() == 1);
    CHECK(simplex_volume(t0[0]) == Rational(6 * 6 * 6 * 6, 24));

    CHECK_THROWS_AS(cohen_hickey_triangulation(LatticePolytopeP::p2(4, 1, 3)),
                    std::invalid_argument);
}

TEST_CASE("one-cut triangulation yields the four known label sets") {
    auto P = LatticePolytopeP::p1(4, 2);
    auto verts = P.vertices();
    auto tris = cohen_hickey_triangulation(P);
    REQUIRE(tris.size() == 4);

    auto label_of = [&](const LatticePoint& p) {
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == p) return static_cast<int>(i) + 1; // 1-based labels
        REQUIRE(false);
        return -1;
    };
    std::set<std::set<int>> got;
    for (const auto& s : tris) {
        std::set<int> labels;
        for (const auto& p : s) labels.insert(label_of(p));
        REQUIRE(labels.size() == 5);
        got.insert(labels);
    }
    std::set<std::set<int>> expect = {
        {1, 5, 6, 7, 8}, {1, 2, 6, 7, 8}, {1, 2, 3, 4, 8}, {1, 2, 3, 7, 8}};
    CHECK(got == expect);
}

TEST_CASE("triangulation volumes add up to the closed form") {
    for (auto [m, l] : std::vector<std::pair<int64_t, int64_t>>{
             {4, 2}, {5, 1}, {6, 2}, {7, 3}, {9, 4}, {10, 1}}) {
        auto tris = cohen_hickey_triangulation(LatticePolytopeP::p1(m, l));
        REQUIRE(tris.size() == 4);
        Rational sum = 0;
        std::multiset<Rational> vols;
        for (const auto& s : tris) {
            Rational v = simplex_volume(s);
            sum += v;
            vols.insert(v);
        }
        CHECK(sum == volume_p1(m, l));
        // Three slabs of volume l(m-l)^3/24 and one cap of volume m(m-l)^3/24.
        Rational cube = Rational((m - l) * (m - l) * (m - l));
        CHECK(vols.count(cube * l / 24) >= 3);
        CHECK(vols.count(cube * m / 24) >= 1);
    }
}

TEST_CASE("closed-form volumes") {
    CHECK(volume_p1(4, 2) == Rational(10, 3));
    CHECK(volume_p2(4, 1, 3) == Rational(22, 3));
    for (int64_t m : {1, 2, 5, 8})
        CHECK(volume_p1(m, 0) == Rational(m * m * m * m, 24));
    CHECK(volume_p1(4, 4) == Rational(0));
    CHECK_THROWS_AS(volume_p1(4, 5), std::domain_error);
    CHECK_THROWS_AS(volume_p1(4, -1), std::domain_error);
    CHECK_THROWS_AS(volume_p2(4, 3, 3), std::domain_error);
}

TEST_CASE("scaled-sum parameters have the frozen linear forms") {
    auto at = [](const RatPoly& p, std::array<long, 4> s) {
        return p.evaluate<Rational>({Rational(s[0]), Rational(s[1]), Rational(s[2]), Rational(s[3])});
    };

    auto mp4 = minkowski_params(4);
    // m' = 4(s1+s2+s3+s4), l' = 2s1+s2+s3, k' = 4(s1+s4) + 3(s2+s3).
    CHECK(at(mp4.m_form, {1, 1, 1, 1}) == Rational(16));
    CHECK(at(mp4.l_form, {1, 0, 0, 0}) == Rational(2));
    CHECK(at(mp4.l_form, {0, 1, 1, 0}) == Rational(2));
    CHECK(at(mp4.l_form, {0, 0, 0, 1}) == Rational(0));
    CHECK(at(mp4.k_form, {1, 0, 0, 0}) == Rational(4));
    CHECK(at(mp4.k_form, {0, 1, 0, 0}) == Rational(3));
    CHECK(at(mp4.k_form, {0, 0, 0, 1}) == Rational(4));

    auto mp5 = minkowski_params(5);
    // Parity swaps which summand is the one-cut shape; l' is unchanged.
    CHECK(at(mp5.l_form, {1, 0, 0, 0}) == Rational(2));
    CHECK(at(mp5.l_form, {0, 1, 1, 0}) == Rational(2));
    CHECK(at(mp5.k_form, {1, 0, 0, 0}) == Rational(4)); // 5 - 1
    CHECK(at(mp5.k_form, {0, 1, 0, 0}) == Rational(5));
    CHECK(at(mp5.k_form, {0, 0, 0, 1}) == Rational(5));

    CHECK_THROWS_AS(minkowski_params(3), std::domain_error);
}

TEST_CASE("scaled sums of generator polytopes have matching support functions") {
    std::mt19937_64 rng(60319);
    for (int64_t m : {4, 5, 6, 7}) {
        for (int trial = 0; trial < 8; ++trial) {
            std::array<int64_t, 4> s;
            for (auto& x : s) x = 1 + static_cast<int64_t>(rng() % 5);

            auto mp = minkowski_params(m);
            auto at = [&](const RatPoly& p) {
                Rational v = p.evaluate<Rational>(
                    {Rational(s[0]), Rational(s[1]), Rational(s[2]), Rational(s[3])});
                return static_cast<int64_t>(numerator(v));
            };
            auto combined = LatticePolytopeP::p2(at(mp.m_form), at(mp.l_form), at(mp.k_form));

            for (int dir = 0; dir < 40; ++dir) {
                std::array<int64_t, 4> w;
                for (auto& x : w) x = static_cast<int64_t>(rng() % 19) - 9;
                int64_t lhs = support(combined, w);
                int64_t rhs = 0;
                for (int i = 1; i <= 4; ++i)
                    rhs += s[static_cast<size_t>(i - 1)] * support(shape_of_generator(i, m), w);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("volume polynomial is homogeneous of degree 4 and symmetric in l2, l3") {
    for (int64_t m : {4, 5, 6}) {
        RatPoly vp = minkowski_volume_poly(m);
        CHECK(vp.degree() == 4);
        CHECK(vp.homogeneous_part(4) == vp);

        // Swap l2 and l3.
        std::vector<RatPoly> swap_images = {RatPoly::variable(4, 0), RatPoly::variable(4, 2),
                                            RatPoly::variable(4, 1), RatPoly::variable(4, 3)};
        CHECK(vp.substitute(swap_images) == vp);
    }
}

TEST_CASE("volume polynomial restricts to the single-shape volumes") {
    for (int64_t m : {4, 5, 6, 7}) {
        RatPoly vp = minkowski_volume_poly(m);
        auto at = [&](long a, long b, long c, long d) {
            return vp.evaluate<Rational>({Rational(a), Rational(b), Rational(c), Rational(d)});
        };
        bool even = m % 2 == 0;
        Rational v1 = even ? volume_p1(m, 2) : volume_p2(m, 2, m - 1);
        Rational v23 = even ? volume_p2(m, 1, m - 1) : volume_p1(m, 1);
        CHECK(at(1, 0, 0, 0) == v1);
        CHECK(at(0, 1, 0, 0) == v23);
        CHECK(at(0, 0, 1, 0) == v23);
        CHECK(at(0, 0, 0, 1) == Rational(m * m * m * m, 24));

        // Full sum with unit weights against the closed form for the combined shape.
        auto mp = minkowski_params(m);
        auto param = [&](const RatPoly& p) {
            Rational v = p.evaluate<Rational>({Rational(1), Rational(1), Rational(1), Rational(1)});
            return static_cast<int64_t>(numerator(v));
        };
        CHECK(at(1, 1, 1, 1) == volume_p2(param(mp.m_form), param(mp.l_form), param(mp.k_form)));
    }
}

TEST_CASE("mixed volume and the inscribed bound follow the quartic formula") {
    std::vector<int64_t> mv_expect = {0, 4, 48, 192, 520, 1140, 2184, 3808, 6192, 9540};
    std::vector<int64_t> bound_expect = {0, 1, 12, 48, 130, 285, 546, 952, 1548, 2385};
    for (int64_t m = 1; m <= 10; ++m) {
        CHECK(mixed_volume(m) == mv_expect[static_cast<size_t>(m - 1)]);
        CHECK(inscribed_bound(m) == bound_expect[static_cast<size_t>(m - 1)]);
    }
    for (int64_t m = 1; m <= 30; ++m) {
        CHECK(mixed_volume(m) % 4 == 0);
        CHECK(mixed_volume(m) == m * m * m * m - 5 * m * m + 4 * m);
    }
    CHECK_THROWS_AS(mixed_volume(0), std::domain_error);
}

TEST_CASE("planar mixed area sanity oracle") {
    auto rect = [](int64_t a, int64_t b) {
        return std::vector<LatticePoint2>{{0, 0}, {a, 0}, {a, b}, {0, b}};
    };
    // Rectangles: mixed area a1*b2 + a2*b1.
    CHECK(mixed_area_2d(rect(2, 3), rect(5, 7)) == Rational(2 * 7 + 3 * 5));
    CHECK(mixed_area_2d(rect(1, 1), rect(1, 1)) == Rational(2));

    // Square against a vertical segment.
    std::vector<LatticePoint2> seg = {{0, 0}, {0, 1}};
    CHECK(mixed_area_2d(rect(1, 1), seg) == Rational(1));

    // Against a point: zero.
    std::vector<LatticePoint2> pt = {{3, 4}};
    CHECK(mixed_area_2d(rect(2, 2), pt) == Rational(0));

    // P + P doubles the area.
    std::vector<LatticePoint2> tri = {{0, 0}, {3, 0}, {0, 2}};
    CHECK(mixed_area_2d(tri, tri) == Rational(2) * Rational(3 * 2, 2));

    // Vertex order must not matter.
    std::vector<LatticePoint2> shuffled = {{0, 2}, {0, 0}, {3, 0}};
    CHECK(mixed_area_2d(shuffled, rect(1, 2)) == mixed_area_2d(tri, rect(1, 2)));

    std::vector<LatticePoint2> dent = {{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}};
    CHECK_THROWS_AS(mixed_area_2d(dent, rect(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(mixed_area_2d({}, rect(1, 1)), std::invalid_argument);
}
