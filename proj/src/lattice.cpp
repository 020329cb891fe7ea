#include "sqtile/lattice.hpp"

#include <algorithm>
#include <map>

namespace sqtile {

namespace {

QuadVal scale_of(LatticeMode mode) { return QuadVal(Rat(mode == LatticeMode::TwoG ? 2 : 1)); }

QuadVal half(const QuadVal& a, const QuadVal& b) { return (a + b) * QuadVal(Rat(1, 2)); }

}  // namespace

std::pair<QuadVal, QuadVal> LatticeSpec::g1() const {
    QuadVal k = scale_of(mode);
    return {frame.q * k, frame.p * k};
}

std::pair<QuadVal, QuadVal> LatticeSpec::g2() const {
    QuadVal k = scale_of(mode);
    return {-frame.p * lambda * k, frame.q * lambda * k};
}

QuadVal LatticeSpec::det() const {
    auto [ax, ay] = g1();
    auto [bx, by] = g2();
    return ax * by - ay * bx;
}

std::pair<QuadVal, QuadVal> GroupElement::apply(const QuadVal& x, const QuadVal& y) const {
    if (reflected) return {tx - x, ty - y};
    return {x + tx, y + ty};
}

PlacedSquare GroupElement::apply(const PlacedSquare& s) const {
    if (reflected) return {tx - s.x - s.side, ty - s.y - s.side, s.side};
    return {s.x + tx, s.y + ty, s.side};
}

std::string GroupElement::str() const {
    std::string t = "(" + tx.str() + ", " + ty.str() + ")";
    return reflected ? "reflection through " + t + "/2" : "translation by " + t;
}

std::string TilingReport::str() const {
    switch (kind) {
        case Kind::Ok:
            return "ok";
        case Kind::AreaMismatch:
            return "area mismatch: squares cover " + actual_area.str() + ", cell requires " +
                   expected_area.str();
        case Kind::Overlap:
            return "overlap: square " + std::to_string(i) + " meets " + elem.str() +
                   " of square " + std::to_string(j) + " at (" + wx.str() + ", " + wy.str() + ")";
    }
    return "?";
}

namespace {

struct Box {
    QuadVal xlo, xhi, ylo, yhi;  // closed; may be empty (hi < lo)
};

// All integer pairs (m, n) with m*g1 + n*g2 inside the closed box,
// widened to the bounding box of the preimage parallelogram. Callers
// re-test every candidate exactly, so over-enumeration is harmless.
std::vector<std::pair<long, long>> lattice_coeffs_in_box(const LatticeSpec& lat, const Box& box,
                                                         const Rat& window_scale) {
    auto [ax, ay] = lat.g1();
    auto [bx, by] = lat.g2();
    QuadVal det = lat.det();

    Box b = box;
    if (!(window_scale == Rat(1))) {
        QuadVal w{window_scale};
        QuadVal xc = half(b.xlo, b.xhi), xh = (b.xhi - b.xlo) * QuadVal(Rat(1, 2));
        QuadVal yc = half(b.ylo, b.yhi), yh = (b.yhi - b.ylo) * QuadVal(Rat(1, 2));
        b = {xc - w * xh, xc + w * xh, yc - w * yh, yc + w * yh};
    }

    // (m, n) = A^{-1} t with A = [g1 g2].
    auto pre_m = [&](const QuadVal& tx, const QuadVal& ty) { return (by * tx - bx * ty) / det; };
    auto pre_n = [&](const QuadVal& tx, const QuadVal& ty) { return (ax * ty - ay * tx) / det; };

    bool first = true;
    QuadVal mlo, mhi, nlo, nhi;
    for (const QuadVal& tx : {b.xlo, b.xhi}) {
        for (const QuadVal& ty : {b.ylo, b.yhi}) {
            QuadVal m = pre_m(tx, ty), n = pre_n(tx, ty);
            if (first) {
                mlo = mhi = m;
                nlo = nhi = n;
                first = false;
            } else {
                if (m < mlo) mlo = m;
                if (m > mhi) mhi = m;
                if (n < nlo) nlo = n;
                if (n > nhi) nhi = n;
            }
        }
    }

    auto to_long = [](const mpz_class& z) {
        if (!z.fits_slong_p())
            throw std::invalid_argument("lattice window is unreasonably large");
        return z.get_si();
    };
    long m0 = to_long(-((-mlo).floor()));  // ceil(mlo)
    long m1 = to_long(mhi.floor());
    long n0 = to_long(-((-nlo).floor()));
    long n1 = to_long(nhi.floor());

    std::vector<std::pair<long, long>> out;
    for (long m = m0; m <= m1; ++m)
        for (long n = n0; n <= n1; ++n) out.emplace_back(m, n);
    return out;
}

GroupElement translation(const LatticeSpec& lat, long m, long n) {
    auto [ax, ay] = lat.g1();
    auto [bx, by] = lat.g2();
    QuadVal mm{Rat(m)}, nn{Rat(n)};
    return {false, mm * ax + nn * bx, mm * ay + nn * by};
}

// Open-interior overlap test; fills in the witness (box center of the
// intersection) on success.
bool squares_overlap(const PlacedSquare& a, const PlacedSquare& b, QuadVal* wx, QuadVal* wy) {
    QuadVal ax1 = a.x + a.side, ay1 = a.y + a.side;
    QuadVal bx1 = b.x + b.side, by1 = b.y + b.side;
    if (!(b.x < ax1 && a.x < bx1 && b.y < ay1 && a.y < by1)) return false;
    *wx = half(std::max(a.x, b.x), std::min(ax1, bx1));
    *wy = half(std::max(a.y, b.y), std::min(ay1, by1));
    return true;
}

// Enumerates the group elements that could bring square j into contact
// with square i: translations t in the open box where the interiors meet,
// and (for wrappings) reflections x -> w - x likewise.
struct PairScan {
    std::vector<GroupElement> elems;
};

PairScan scan_elements(const TilingInstance& t, const PlacedSquare& si, const PlacedSquare& sj,
                       bool identity_allowed, const Rat& window_scale) {
    PairScan out;
    // x -> x + t: interiors meet iff t lies in the open box below.
    Box tbox{si.x - sj.x - sj.side, si.x - sj.x + si.side,
             si.y - sj.y - sj.side, si.y - sj.y + si.side};
    for (auto [m, n] : lattice_coeffs_in_box(t.lattice, tbox, window_scale)) {
        if (!identity_allowed && m == 0 && n == 0) continue;
        out.elems.push_back(translation(t.lattice, m, n));
    }
    if (t.kind == TilingKind::Wrap) {
        // x -> w - x: interiors meet iff w lies in the open box below.
        Box wbox{si.x + sj.x, si.x + sj.x + si.side + sj.side,
                 si.y + sj.y, si.y + sj.y + si.side + sj.side};
        for (auto [m, n] : lattice_coeffs_in_box(t.lattice, wbox, window_scale)) {
            GroupElement g = translation(t.lattice, m, n);
            g.reflected = true;
            out.elems.push_back(g);
        }
    }
    return out;
}

TilingReport verify_impl(const TilingInstance& t, const Rat& window_scale) {
    if (window_scale < Rat(1))
        throw std::invalid_argument("verify: window scale must be >= 1");
    if (t.lattice.lambda.sign() <= 0)
        throw std::invalid_argument("verify: lambda must be positive");
    if (t.lattice.frame.q.sign() <= 0 || t.lattice.frame.p.sign() < 0)
        throw std::invalid_argument("verify: frame direction must satisfy q > 0, p >= 0");
    for (std::size_t i = 0; i < t.squares.size(); ++i)
        if (t.squares[i].side.sign() <= 0)
            throw std::invalid_argument("verify: square " + std::to_string(i) +
                                        " has a non-positive side");
    if (t.kind == TilingKind::Wrap && t.lattice.mode != LatticeMode::TwoG)
        throw std::invalid_argument(
            "verify: a wrapping instance needs the doubled lattice (mode 2g)");

    // (A) The squares must fill exactly one fundamental domain: the full
    // cell for a tiling, half of the doubled cell (the two rectangle
    // sides) for a wrapping.
    QuadVal expected = t.lattice.det();
    if (t.kind == TilingKind::Wrap) expected = expected * QuadVal(Rat(1, 2));
    QuadVal actual;
    for (const PlacedSquare& s : t.squares) actual += s.side * s.side;
    if (actual != expected) {
        TilingReport r;
        r.kind = TilingReport::Kind::AreaMismatch;
        r.expected_area = expected;
        r.actual_area = actual;
        return r;
    }

    // (B) No two group images of squares may share interior points.
    for (std::size_t i = 0; i < t.squares.size(); ++i) {
        for (std::size_t j = i; j < t.squares.size(); ++j) {
            bool identity_allowed = i != j;
            PairScan scan =
                scan_elements(t, t.squares[i], t.squares[j], identity_allowed, window_scale);
            for (const GroupElement& g : scan.elems) {
                PlacedSquare image = g.apply(t.squares[j]);
                QuadVal wx, wy;
                if (squares_overlap(t.squares[i], image, &wx, &wy)) {
                    TilingReport r;
                    r.kind = TilingReport::Kind::Overlap;
                    r.i = i;
                    r.j = j;
                    r.elem = g;
                    r.wx = wx;
                    r.wy = wy;
                    return r;
                }
            }
        }
    }
    return {};
}

}  // namespace

TilingReport verify_periodic_tiling(const TilingInstance& t, const Rat& window_scale) {
    if (t.kind != TilingKind::Plane)
        throw std::invalid_argument("verify_periodic_tiling: instance is not a plane tiling");
    return verify_impl(t, window_scale);
}

TilingReport verify_wrapping(const TilingInstance& t, const Rat& window_scale) {
    if (t.kind != TilingKind::Wrap)
        throw std::invalid_argument("verify_wrapping: instance is not a wrapping");
    return verify_impl(t, window_scale);
}

TilingReport verify_tiling(const TilingInstance& t, const Rat& window_scale) {
    return t.kind == TilingKind::Plane ? verify_periodic_tiling(t, window_scale)
                                       : verify_wrapping(t, window_scale);
}

std::vector<PlacedSquare> group_images(const PlacedSquare& s, const LatticeSpec& lattice,
                                       TilingKind kind, const QuadVal& radius) {
    if (radius.sign() < 0) throw std::invalid_argument("group_images: radius must be >= 0");
    std::vector<PlacedSquare> out;
    // Window: the square's own box inflated by the radius; keep images
    // whose closed box meets it.
    QuadVal wxlo = s.x - radius, wxhi = s.x + s.side + radius;
    QuadVal wylo = s.y - radius, wyhi = s.y + s.side + radius;

    Box tbox{wxlo - s.side - s.x, wxhi - s.x, wylo - s.side - s.y, wyhi - s.y};
    for (auto [m, n] : lattice_coeffs_in_box(lattice, tbox, Rat(1))) {
        PlacedSquare img = translation(lattice, m, n).apply(s);
        if (img.x <= wxhi && wxlo <= img.x + img.side && img.y <= wyhi &&
            wylo <= img.y + img.side)
            out.push_back(img);
    }
    if (kind == TilingKind::Wrap) {
        Box wbox{wxlo + s.x, wxhi + s.x + s.side, wylo + s.y, wyhi + s.y + s.side};
        for (auto [m, n] : lattice_coeffs_in_box(lattice, wbox, Rat(1))) {
            GroupElement g = translation(lattice, m, n);
            g.reflected = true;
            PlacedSquare img = g.apply(s);
            if (img.x <= wxhi && wxlo <= img.x + img.side && img.y <= wyhi &&
                wylo <= img.y + img.side)
                out.push_back(img);
        }
    }
    return out;
}

Dissection induce_corner_dissection(const TilingInstance& t, const CornerShape& corner,
                                    const QuadVal& px, const QuadVal& py) {
    corner.validate();
    TilingReport base = verify_tiling(t);
    if (!base.is_ok())
        throw std::invalid_argument("induce_corner_dissection: tiling does not verify: " +
                                    base.str());

    struct Cell {
        Rect local;        // corner-local rectangle
        std::size_t square;
        GroupElement elem;
    };
    std::vector<Cell> cells;

    QuadVal ax0 = px, ax1 = px + corner.a;
    QuadVal ay0 = py, ay1 = py + corner.b;
    // Notch, corner-local coordinates.
    QuadVal nx0 = corner.a - corner.c, ny0 = corner.b - corner.d;
    bool has_notch = !corner.is_rectangle();

    for (std::size_t j = 0; j < t.squares.size(); ++j) {
        const PlacedSquare& s = t.squares[j];
        // All group elements whose image of s meets the bounding box.
        Box tbox{ax0 - s.x - s.side, ax1 - s.x, ay0 - s.y - s.side, ay1 - s.y};
        std::vector<GroupElement> elems;
        for (auto [m, n] : lattice_coeffs_in_box(t.lattice, tbox, Rat(1)))
            elems.push_back(translation(t.lattice, m, n));
        if (t.kind == TilingKind::Wrap) {
            Box wbox{ax0 + s.x, ax1 + s.x + s.side, ay0 + s.y, ay1 + s.y + s.side};
            for (auto [m, n] : lattice_coeffs_in_box(t.lattice, wbox, Rat(1))) {
                GroupElement g = translation(t.lattice, m, n);
                g.reflected = true;
                elems.push_back(g);
            }
        }
        for (const GroupElement& g : elems) {
            PlacedSquare img = g.apply(s);
            // Clip to the bounding box, in corner-local coordinates.
            QuadVal cx0 = std::max(img.x, ax0) - px;
            QuadVal cx1 = std::min(img.x + img.side, ax1) - px;
            QuadVal cy0 = std::max(img.y, ay0) - py;
            QuadVal cy1 = std::min(img.y + img.side, ay1) - py;
            if (!(cx0 < cx1 && cy0 < cy1)) continue;
            if (has_notch && cx1 > nx0 && cy1 > ny0) {
                // The clip meets the notch; it must lose a full-width or
                // full-height strip, or the cell is not a rectangle.
                if (cx0 >= nx0) {
                    cy1 = std::min(cy1, ny0);  // clip is inside the notch columns
                } else if (cy0 >= ny0) {
                    cx1 = std::min(cx1, nx0);  // clip is inside the notch rows
                } else {
                    throw ArrangementNotRectangular(
                        "image of square " + std::to_string(j) + " under " + g.str() +
                        " meets the notch corner; the induced cell is not a rectangle");
                }
                if (!(cx0 < cx1 && cy0 < cy1)) continue;  // clip lay entirely in the notch
            }
            cells.push_back({Rect{cx0, cy0, cx1 - cx0, cy1 - cy0}, j, g});
        }
    }

    Dissection out;
    out.region = corner;
    // One group per (square, orientation); cells keep their scan order.
    std::map<std::pair<std::size_t, bool>, std::size_t> group_of;
    for (const Cell& c : cells) {
        out.pieces.push_back(c.local);
        auto key = std::make_pair(c.square, c.elem.reflected);
        auto it = group_of.find(key);
        if (it == group_of.end()) {
            it = group_of.emplace(key, out.groups.size()).first;
            out.groups.push_back(PieceGroup{t.squares[c.square].side, {}});
        }
        // Pull the cell back into the source square's coordinates.
        const PlacedSquare& src = t.squares[c.square];
        QuadVal absx0 = c.local.x + px, absy0 = c.local.y + py;
        QuadVal sqx, sqy;
        if (c.elem.reflected) {
            sqx = c.elem.tx - (absx0 + c.local.w) - src.x;
            sqy = c.elem.ty - (absy0 + c.local.h) - src.y;
        } else {
            sqx = absx0 - c.elem.tx - src.x;
            sqy = absy0 - c.elem.ty - src.y;
        }
        out.groups[it->second].members.push_back(
            GroupMember{out.pieces.size() - 1, sqx, sqy, false});
    }
    return out;
}

}  // namespace sqtile
