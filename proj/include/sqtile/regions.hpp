#pragma once

// Exact rectilinear regions and dissection certificates.
//
// A Dissection claims that a list of axis-parallel rectangles covers a
// region (a rectangle or an L-shaped corner) exactly once, optionally
// together with a grouping of the pieces into squares. verify_dissection
// decides the cover claim by an exact vertical slab decomposition; the
// grouping claim is checked by re-running the same decision inside each
// declared square. All verdicts carry exact witness points.

#include "sqtile/quad.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sqtile {

struct Rect {
    QuadVal x, y;  // lower-left corner
    QuadVal w, h;  // strictly positive for a well-formed piece
};

// The L-shaped region [0,a]x[0,b] minus the open notch (a-c,a]x(b-d,b].
// The notch sits at the (a,b) corner of the bounding box; c = 0 or d = 0
// degenerates the corner to the full a x b rectangle.
struct CornerShape {
    QuadVal a, b, c, d;

    void validate() const;
    bool is_rectangle() const { return c.is_zero() || d.is_zero(); }
};

using Region = std::variant<Rect, CornerShape>;

QuadVal region_area(const Region& r);
QuadVal region_area(const Rect& r);
QuadVal region_area(const CornerShape& c);

struct GroupMember {
    std::size_t piece;   // index into Dissection::pieces
    QuadVal x, y;        // placement inside the group's square
    bool transposed = false;  // width/height swapped relative to the region placement
};

struct PieceGroup {
    QuadVal side;  // the square this group reassembles
    std::vector<GroupMember> members;
};

struct Dissection {
    Region region;             // CornerShape regions sit at the origin
    std::vector<Rect> pieces;  // absolute placements
    std::vector<PieceGroup> groups;  // optional square-regrouping certificate
};

struct VerifyReport {
    enum class Kind { Ok, Gap, Overlap, Outside };

    Kind kind = Kind::Ok;
    std::size_t i = 0, j = 0;  // offending piece indices (Overlap: both; Outside: i)
    QuadVal wx, wy;            // exact witness point

    bool is_ok() const { return kind == Kind::Ok; }
    std::string str() const;

    static VerifyReport ok() { return {}; }
    static VerifyReport gap(QuadVal x, QuadVal y);
    static VerifyReport overlap(std::size_t i, std::size_t j, QuadVal x, QuadVal y);
    static VerifyReport outside(std::size_t i, QuadVal x, QuadVal y);
};

struct GroupReport {
    bool ok = true;
    std::size_t group = 0;
    std::string reason;

    std::string str() const { return ok ? "ok" : "bad group " + std::to_string(group) + ": " + reason; }
};

// Exact decision: do the pieces tile the region with multiplicity one?
// Throws std::invalid_argument on a malformed piece (non-positive side).
VerifyReport verify_dissection(const Dissection& d);

// Checks the square-regrouping certificate: the groups must partition the
// piece index set (std::invalid_argument otherwise), and each group's
// members, re-placed inside the declared square, must tile it exactly.
GroupReport verify_square_grouping(const Dissection& d);

}  // namespace sqtile
