#include "sqtile/corner.hpp"

#include <stdexcept>

namespace sqtile {

Direction normalize_direction(const QuadVal& vx, const QuadVal& vy) {
    if (vx.is_zero() && vy.is_zero())
        throw std::invalid_argument("normalize_direction: zero vector");
    QuadVal p = vx, q = vy;
    int sq = q.sign();
    if (sq < 0 || (sq == 0 && p.sign() < 0)) {
        p = -p;
        q = -q;
    }
    if (p.sign() < 0 || q.is_zero()) {
        QuadVal np = q, nq = -p;
        p = np;
        q = nq;
    }
    if (q.sign() < 0) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

namespace {

CornerData corner_geometry(const QuadVal& lambda, const Direction& dir, LatticeMode mode) {
    if (lambda.sign() <= 0) throw std::invalid_argument("build_corner: lambda must be positive");
    if (dir.q.sign() <= 0 || dir.p.sign() < 0)
        throw std::invalid_argument("build_corner: direction must satisfy q > 0, p >= 0");

    QuadVal scale{Rat(mode == LatticeMode::TwoG ? 2 : 1)};
    CornerData cd;
    cd.a = dir.q * scale;
    cd.d = dir.p * scale;
    cd.e = -dir.p * lambda * scale;
    cd.f = dir.q * lambda * scale;

    // m is pinned by 0 <= e + m*a < a, i.e. m = -floor(e/a); the bound is
    // strict on the right because p*lambda/q is irrational whenever p != 0
    // and lambda is.
    cd.m = -(cd.e / cd.a).floor();
    QuadVal mval{rat_of(cd.m)};
    cd.c = cd.e + mval * cd.a;
    cd.b = cd.f + mval * cd.d;
    return cd;
}

}  // namespace

CornerShape corner_shape(const QuadVal& lambda, const Direction& dir, LatticeMode mode) {
    return corner_geometry(lambda, dir, mode).shape();
}

CornerData build_corner(const QuadVal& lambda, const Direction& dir, LatticeMode mode) {
    if (lambda.is_rational())
        throw std::invalid_argument("build_corner: lambda must be irrational");
    CornerData cd = corner_geometry(lambda, dir, mode);
    auto co = corner_coefficients(cd.a, cd.d, cd.e, lambda);
    cd.d0 = co[0];
    cd.d1 = co[1];
    cd.e0 = co[2];
    cd.e1 = co[3];
    return cd;
}

std::array<Rat, 4> corner_coefficients(const QuadVal& a, const QuadVal& d, const QuadVal& e,
                                       const QuadVal& lambda) {
    FieldBasis basis(a, lambda);
    GoodCoords dc = basis.coords(d);
    GoodCoords ec = basis.coords(e);
    return {dc[0], dc[1], ec[0], ec[1]};
}

}  // namespace sqtile
