#pragma once

// The x-area invariant: a rectangle with good sides gets the value
// (z0 + z1 x)(w0 + w1 x) built from the a- and lambda*a-coefficients of
// its sides. The invariant is additive over dissections and nonnegative
// on squares, and the closed form for a staircase corner is
// x - (d0 + d1 x)(e0 + e1 x). Sign analysis of that polynomial drives the
// feasibility classification of lambda.

#include "sqtile/basis.hpp"
#include "sqtile/corner.hpp"
#include "sqtile/quad.hpp"
#include "sqtile/regions.hpp"

#include <stdexcept>
#include <string>

namespace sqtile {

// c2*x^2 + c1*x + c0 with exact rational coefficients.
struct QuadPoly {
    Rat c0, c1, c2;

    Rat eval(const Rat& x) const { return (c2 * x + c1) * x + c0; }
    QuadVal eval(const QuadVal& x) const {
        return (QuadVal(c2) * x + QuadVal(c1)) * x + QuadVal(c0);
    }

    QuadPoly& operator+=(const QuadPoly& o) {
        c0 += o.c0;
        c1 += o.c1;
        c2 += o.c2;
        return *this;
    }
    friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
    friend bool operator==(const QuadPoly& a, const QuadPoly& b) {
        return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
    }

    std::string str() const;
};

// Rationals p >= q >= r >= 0 certifying lambda = p +- sqrt(q^2 - r^2).
struct PqrWitness {
    Rat p, q, r;

    std::string str() const { return "(" + p.str() + ", " + q.str() + ", " + r.str() + ")"; }
};

// x-area of a rectangle with the given good sides: the product of the two
// hats, expanded.
QuadPoly xarea_rect(const GoodCoords& side1, const GoodCoords& side2);
QuadPoly xarea_rect(const LinPoly& side1, const LinPoly& side2);

// Sum of the piece x-areas of a verified dissection. Pre: the dissection
// passed verify_dissection; every piece side must be good.
QuadPoly xarea_sum(const Dissection& d, const FieldBasis& basis);

// Closed form for a corner: x - (d0 + d1 x)(e0 + e1 x).
QuadPoly corner_xarea(const CornerData& cd);

struct NonnegReport {
    bool nonnegative = true;
    Rat witness;  // when !nonnegative: a rational x with S(x) < 0

    std::string str() const;
};

// Exact sign analysis of a rational quadratic. Negative polynomials
// always come with a rational witness (rationals are dense, so a
// quadratic negative anywhere is negative at a rational).
NonnegReport analyze_nonnegativity(const QuadPoly& s);

// Case split for the corner x-area: either it is linear in x (slope
// reported as the full expanded linear coefficient), or lambda satisfies
// d1*lambda^2 + (e1 + d0)*lambda + e0 = 0 with d1 != 0; the relation is
// asserted exactly in the field.
struct AreaCase {
    enum class Kind { Linear, QuadraticRelation };

    Kind kind;
    Rat slope;            // Linear: coefficient of x
    Rat ra, rb, rc;       // QuadraticRelation: d1, e1 + d0, e0

    std::string str() const;
};

// Thrown when the asserted lambda relation fails; the rotation identity
// (e, f) = lambda*(-d, a) forces it, so a failure means a corrupted
// CornerData.
struct RelationViolated : std::logic_error {
    using std::logic_error::logic_error;
};

AreaCase classify_area_case(const CornerData& cd, const QuadVal& lambda);

// Discriminant of the corner x-area quadratic under the substitution
// 2p = -(e1 + d0)/d1, q = -e0/d1, returned through the factored form
// (2 d1 d0 p + d0^2 - d1^2 q + 1)^2 + 4 d1^2 q; the expanded form is
// asserted equal. Throws std::domain_error when d1 = 0.
Rat area_discriminant(const Rat& d0, const Rat& d1, const Rat& p, const Rat& q);

struct PreconditionFailed : std::domain_error {
    std::string which;
    PreconditionFailed(std::string w, const std::string& detail)
        : std::domain_error("extract_pqr: precondition " + w + " failed: " + detail),
          which(std::move(w)) {}
};

// Builds the witness (p, q, r) from the corner coefficients when lambda
// is the positive root of d1*x^2 + (e1+d0)*x + e0 and the sign condition
// (e0 d1 - e1 d0 + 1)^2 - 4 d1 e0 <= 0 holds (the boundary case is
// accepted; it occurs, e.g., when the x-area is a perfect square).
// The witness is verified exactly before it is returned.
PqrWitness extract_pqr(const Rat& d0, const Rat& d1, const Rat& e0, const Rat& e1,
                       const QuadVal& lambda);

}  // namespace sqtile
