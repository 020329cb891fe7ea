#pragma once

// The lattice generated by the 1 x lambda rectangle, in the rotated
// unnormalized frame, with exact verification of periodic square tilings
// (simple equivalence: lattice translations) and two-sided wrappings
// (complex equivalence: point reflections about lattice nodes, whose
// translation subgroup is the doubled lattice). Coverage is certified by
// the measure argument: total square area equal to the fundamental cell
// plus pairwise disjointness of all group images.
//
// induce_corner_dissection realizes the cut-line construction: the group
// images of the squares slice a staircase corner into rectangles, which
// regroup, one group per (square, orientation), into dissections of the
// original squares.

#include "sqtile/corner.hpp"
#include "sqtile/quad.hpp"
#include "sqtile/regions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sqtile {

struct LatticeSpec {
    QuadVal lambda;
    LatticeMode mode = LatticeMode::G;  // TwoG doubles both generators
    Direction frame;

    // Generators in frame coordinates: g1 = rho(1, 0) = (q, p) and
    // g2 = rho(0, lambda) = (-p lambda, q lambda), doubled in TwoG mode.
    std::pair<QuadVal, QuadVal> g1() const;
    std::pair<QuadVal, QuadVal> g2() const;
    // det(g1, g2) = k^2 (p^2 + q^2) lambda > 0.
    QuadVal det() const;
};

enum class TilingKind { Plane, Wrap };

struct PlacedSquare {
    QuadVal x, y;  // lower-left corner, frame coordinates
    QuadVal side;
};

struct TilingInstance {
    LatticeSpec lattice;
    TilingKind kind = TilingKind::Plane;
    std::vector<PlacedSquare> squares;
};

// A symmetry of the arrangement: x -> x + t, or the point reflection
// x -> t - x (about the node t/2).
struct GroupElement {
    bool reflected = false;
    QuadVal tx, ty;

    std::pair<QuadVal, QuadVal> apply(const QuadVal& x, const QuadVal& y) const;
    PlacedSquare apply(const PlacedSquare& s) const;
    std::string str() const;

    static GroupElement identity() { return {}; }
};

struct TilingReport {
    enum class Kind { Ok, AreaMismatch, Overlap };

    Kind kind = Kind::Ok;
    QuadVal expected_area, actual_area;  // AreaMismatch
    std::size_t i = 0, j = 0;            // Overlap: square i vs elem(square j)
    GroupElement elem;
    QuadVal wx, wy;  // exact witness point inside the overlap

    bool is_ok() const { return kind == Kind::Ok; }
    std::string str() const;
};

// Exact verification of a plane tiling (kind Plane, simple equivalence).
// window_scale >= 1 enlarges the derived overlap enumeration window; the
// verdict must not depend on it.
TilingReport verify_periodic_tiling(const TilingInstance& t, const Rat& window_scale = Rat(1));

// Exact verification of a two-sided wrapping (kind Wrap, complex
// equivalence; the lattice mode must be TwoG so that the stored
// generators are the translation subgroup).
TilingReport verify_wrapping(const TilingInstance& t, const Rat& window_scale = Rat(1));

// Dispatch on t.kind.
TilingReport verify_tiling(const TilingInstance& t, const Rat& window_scale = Rat(1));

// All group images of one square whose closed bounding box meets the
// square's own box inflated by radius (radius >= 0), in deterministic
// order: translations first, then reflected images.
std::vector<PlacedSquare> group_images(const PlacedSquare& s, const LatticeSpec& lattice,
                                       TilingKind kind, const QuadVal& radius);

// A cell of the induced arrangement failed to be a rectangle; the input
// then violates the staircase assumptions and is reported, never patched.
struct ArrangementNotRectangular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Slices the corner (bounding box anchored at (px, py) in frame
// coordinates) along all group images of the squares of a verified
// tiling. Returns a corner-local Dissection that passes both
// verify_dissection and verify_square_grouping, with one group per
// (square, orientation) pair.
Dissection induce_corner_dissection(const TilingInstance& t, const CornerShape& corner,
                                    const QuadVal& px, const QuadVal& py);

}  // namespace sqtile
