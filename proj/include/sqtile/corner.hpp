#pragma once

// Staircase corners: for a direction u = (p, q) and the lattice generated
// by the 1 x lambda rectangle, the plane is cut by staircases into
// L-shaped corners (degenerating to rectangles when u is axis-aligned).
// This module constructs that corner in closed form, in the rotated
// unnormalized frame, together with its lattice data and the rational
// coefficients of d and e over {a, lambda*a}.

#include "sqtile/basis.hpp"
#include "sqtile/quad.hpp"
#include "sqtile/regions.hpp"

#include <array>

namespace sqtile {

// Tilted axis direction: u = (p, q) in the closed first quadrant including
// the positive y axis and excluding the x axis (q > 0, p >= 0).
struct Direction {
    QuadVal p, q;

    std::string str() const { return p.str() + "," + q.str(); }
};

// Brings an arbitrary nonzero vector into the first quadrant minus Ox by
// negation and 90-degree rotation: negate if q < 0 (or q = 0 and p < 0);
// rotate (p, q) -> (q, -p) if p < 0 or the vector is on Ox; negate again
// if the rotation left q < 0. Throws std::invalid_argument on the zero
// vector.
Direction normalize_direction(const QuadVal& vx, const QuadVal& vy);

// The unnormalized rotation taking u to the positive y axis:
// rho(x, y) = (q x - p y, p x + q y), det = p^2 + q^2 > 0. Working with
// the unnormalized map keeps every coordinate inside Q(sqrt(s)).
struct FrameMap {
    QuadVal p, q;

    std::pair<QuadVal, QuadVal> apply(const QuadVal& x, const QuadVal& y) const {
        return {q * x - p * y, p * x + q * y};
    }
    QuadVal det() const { return p * p + q * q; }
};

enum class LatticeMode { G, TwoG };

// Corner of the staircase tiling in frame coordinates. The bounding box
// is a x b with the c x d notch; (a, d) and (c, b) are the lattice nodes
// at the corner's vertices and (e, f) is the vertical lattice step, with
//   (e, f) = lambda * (-d, a)    and    (c, b) = (e, f) + m * (a, d)
// for the unique integer m giving 0 <= c < a.
struct CornerData {
    QuadVal a, b, c, d, e, f;
    mpz_class m;
    Rat d0, d1, e0, e1;  // d = d0*a + d1*lambda*a, e = e0*a + e1*lambda*a

    CornerShape shape() const { return {a, b, c, d}; }
};

// Closed-form construction: a = q, d = p, e = -p*lambda, f = q*lambda
// (all doubled in TwoG mode, which leaves d0, d1, e0, e1 unchanged).
// Pre: lambda > 0 irrational, q > 0, p >= 0.
CornerData build_corner(const QuadVal& lambda, const Direction& dir, LatticeMode mode);

// Geometric part only: valid for every lambda > 0, rational included
// (the coefficient fields of CornerData are what needs irrationality).
CornerShape corner_shape(const QuadVal& lambda, const Direction& dir, LatticeMode mode);

// The rational coefficients of d and e over {a, lambda*a}, as
// (d0, d1, e0, e1). Recomputed from scratch; build_corner stores the same
// values.
std::array<Rat, 4> corner_coefficients(const QuadVal& a, const QuadVal& d, const QuadVal& e,
                                       const QuadVal& lambda);

}  // namespace sqtile
