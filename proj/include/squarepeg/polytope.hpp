#pragma once

// The three Newton polytope shapes of the corner-system generators, their
// exact volumes, and the mixed-volume bound on isolated inscribed squares.
//
//   P0(m)     = m * standard 4-simplex
//   P1(m,l)   = P0 cut by x3 + x4 >= l
//   P2(m,l,k) = P1 cut by x3 + x4 <= k
//
// Everything here is exact integer/rational arithmetic; the solver never
// depends on this module, it only corroborates it.

#include "squarepeg/poly.hpp"
#include "squarepeg/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace squarepeg {

using LatticePoint = std::array<int64_t, 4>;

enum class PolytopeKind { P0, P1, P2 };

struct LatticePolytopeP {
    PolytopeKind kind = PolytopeKind::P0;
    int64_t m = 0, l = 0, k = 0; // l used by P1/P2, k by P2 only

    static LatticePolytopeP p0(int64_t m);
    static LatticePolytopeP p1(int64_t m, int64_t l);          // 0 < l < m
    static LatticePolytopeP p2(int64_t m, int64_t l, int64_t k); // 0 < l < k < m

    // Vertices in the canonical labeling (5, 8, or 12 of them).
    std::vector<LatticePoint> vertices() const;

    // Facet description: each entry (normal, rhs) encodes normal.x <= rhs.
    struct Halfspace {
        std::array<int64_t, 4> normal;
        int64_t rhs;
    };
    std::vector<Halfspace> halfspaces() const;

    std::string to_string() const; // "P1(4,2)" etc.
};

// Claimed Newton polytope of generator i (1-based) for a generic curve of
// degree m >= 4. The shape alternates with the parity of m:
//   m even: N(g1) = P1(m,2),      N(g2) = N(g3) = P2(m,1,m-1)
//   m odd:  N(g1) = P2(m,2,m-1),  N(g2) = N(g3) = P1(m,1)
// and N(g4) = P0(m) always.
LatticePolytopeP shape_of_generator(int i, int64_t m);

// True iff every exponent of p satisfies every halfspace of P and every
// vertex of P occurs as an exponent of p; together these pin N(p) = P.
bool newton_matches(const RatPoly& p, const LatticePolytopeP& P);

// A 4-simplex as 5 lattice points, affinely independent.
using Simplex4 = std::array<LatticePoint, 5>;

// |det(v1-v0, ..., v4-v0)| / 4!
Rational simplex_volume(const Simplex4& s);

// Cone-over-opposing-facets triangulation, always picking the lowest-labeled
// vertex: on P1 this yields exactly the simplices {1,5,6,7,8}, {1,2,6,7,8},
// {1,2,3,4,8}, {1,2,3,7,8} (1-based vertex labels). P0 is already a simplex;
// P2 is not supported.
std::vector<Simplex4> cohen_hickey_triangulation(const LatticePolytopeP& P);

// (m-l)^3 (m+3l) / 24, valid for 0 <= l < m; l = 0 recovers Vol(P0) = m^4/24.
Rational volume_p1(int64_t m, int64_t l);

// Vol(P2(m,l,k)) = Vol(P1(m,l)) - Vol(P1(m,k)).
Rational volume_p2(int64_t m, int64_t l, int64_t k);

// The scaled Minkowski sum sum_i li * N(gi) is again a P2:
//   mu1 * P1(m,l1) + mu2 * P2(m,l2,k) + l4 * P0(m) = P2(m', l', k')
// with linear forms m', l', k' in the scale variables l1..l4. Which of l1 and
// l2+l3 plays mu1 depends on the parity of m.
struct MinkowskiParams {
    RatPoly m_form{4}, l_form{4}, k_form{4}; // degree-1 in l1..l4
    RatPoly mu1{4}, mu2{4};                  // the parity-dependent regrouping
};
MinkowskiParams minkowski_params(int64_t m); // m >= 4

// Vol(sum_i li * N(gi)) expanded as a degree-4 polynomial in l1..l4.
RatPoly minkowski_volume_poly(int64_t m); // m >= 4

// Coefficient of l1*l2*l3*l4 in the volume polynomial; equals
// m^4 - 5m^2 + 4m, which is also used directly for m in {1,2,3} where the
// polytope route degenerates.
int64_t mixed_volume(int64_t m);

// mixed_volume / 4: the four-fold cover of squares by parameter tuples.
int64_t inscribed_bound(int64_t m);

// Two-dimensional sanity check used by tests: mixed area
// area(P+Q) - area(P) - area(Q) of convex lattice polygons (vertices in any
// order; degenerate segments and points allowed).
using LatticePoint2 = std::array<int64_t, 2>;
Rational mixed_area_2d(const std::vector<LatticePoint2>& P,
                       const std::vector<LatticePoint2>& Q);

} // namespace squarepeg
