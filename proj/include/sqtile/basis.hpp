#pragma once

// Rational-linear structure of the side lengths appearing in a corner
// dissection: the ordered P-set, greedy basis extraction over Q, unique
// coordinates of "good" lengths, and the hat map that keeps only the
// coefficients of the two anchor lengths a and lambda*a.

#include "sqtile/quad.hpp"
#include "sqtile/regions.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sqtile {

using RatVec = std::vector<Rat>;
using GoodCoords = std::vector<Rat>;

// The linear polynomial z0 + z1*x.
struct LinPoly {
    Rat z0, z1;

    friend bool operator==(const LinPoly& a, const LinPoly& b) {
        return a.z0 == b.z0 && a.z1 == b.z1;
    }
    std::string str() const;
};

// Thrown when a value lies outside the Q-span of the active basis.
struct NotGoodError : std::domain_error {
    using std::domain_error::domain_error;
};

// Greedy left-to-right sieve: keep an entry iff it is Q-linearly
// independent of all previously kept entries. Vectors must share one
// length. Returns the kept indices in input order.
std::vector<std::size_t> extract_basis(const std::vector<RatVec>& values);

// Row-echelon solver over the kept vectors of a greedy sieve; answers
// coordinate queries exactly.
class RatBasis {
public:
    explicit RatBasis(const std::vector<RatVec>& values);

    const std::vector<std::size_t>& selected() const { return selected_; }
    std::size_t rank() const { return basis_.size(); }

    // Unique rational coefficients c with sum(c_k * basis_k) = v.
    // Throws NotGoodError when v is outside the span.
    RatVec coords(const RatVec& v) const;

private:
    std::vector<RatVec> basis_;           // kept vectors, original order
    std::vector<std::size_t> selected_;   // their indices in the input
    std::vector<RatVec> echelon_;         // eliminated forms of basis_
    std::vector<std::size_t> pivot_;      // pivot column of each echelon row
};

// Ordered P-set of a corner dissection: a, lambda*a, d, lambda*d, b, c,
// then r_i, lambda*r_i over the sorted distinct piece side lengths.
// Degenerate corner entries (c = 0 or d = 0) stay in place as zeros.
std::vector<QuadVal> build_pset(const CornerShape& corner,
                                const std::vector<QuadVal>& piece_sides,
                                const QuadVal& lambda);

// The field-mode basis {a, lambda*a} of Q(sqrt(s)), with coordinate and
// hat queries for arbitrary field values. Requires a != 0 and an
// irrational lambda; then the greedy sieve over any P-set keeps exactly
// these two entries.
class FieldBasis {
public:
    FieldBasis(QuadVal a, QuadVal lambda);

    const QuadVal& a() const { return a_; }
    const QuadVal& lambda() const { return lambda_; }

    // Coordinates (p0, p1) with v = p0*a + p1*lambda*a; exact.
    GoodCoords coords(const QuadVal& v) const;
    LinPoly hat(const QuadVal& v) const;

private:
    QuadVal a_;
    QuadVal lambda_;
    QuadVal la_;  // lambda*a
};

// Drops every coefficient beyond the a- and lambda*a-slots.
LinPoly hat(const GoodCoords& coords);

}  // namespace sqtile
