#include "sqtile/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqtile {

void CornerShape::validate() const {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw std::invalid_argument("CornerShape: a and b must be positive");
    if (c.sign() < 0 || (c - a).sign() > 0)
        throw std::invalid_argument("CornerShape: need 0 <= c <= a");
    if (d.sign() < 0 || (d - b).sign() > 0)
        throw std::invalid_argument("CornerShape: need 0 <= d <= b");
    if (c == a && d == b)
        throw std::invalid_argument("CornerShape: notch equals the bounding box");
}

QuadVal region_area(const Rect& r) { return r.w * r.h; }
QuadVal region_area(const CornerShape& c) { return c.a * c.b - c.c * c.d; }
QuadVal region_area(const Region& r) {
    return std::visit([](const auto& shape) { return region_area(shape); }, r);
}

VerifyReport VerifyReport::gap(QuadVal x, QuadVal y) {
    VerifyReport r;
    r.kind = Kind::Gap;
    r.wx = std::move(x);
    r.wy = std::move(y);
    return r;
}

VerifyReport VerifyReport::overlap(std::size_t i, std::size_t j, QuadVal x, QuadVal y) {
    VerifyReport r;
    r.kind = Kind::Overlap;
    r.i = i;
    r.j = j;
    r.wx = std::move(x);
    r.wy = std::move(y);
    return r;
}

VerifyReport VerifyReport::outside(std::size_t i, QuadVal x, QuadVal y) {
    VerifyReport r;
    r.kind = Kind::Outside;
    r.i = i;
    r.wx = std::move(x);
    r.wy = std::move(y);
    return r;
}

std::string VerifyReport::str() const {
    switch (kind) {
        case Kind::Ok:
            return "ok";
        case Kind::Gap:
            return "gap at (" + wx.str() + ", " + wy.str() + ")";
        case Kind::Overlap:
            return "overlap of pieces " + std::to_string(i) + " and " + std::to_string(j) +
                   " at (" + wx.str() + ", " + wy.str() + ")";
        case Kind::Outside:
            return "piece " + std::to_string(i) + " outside the region at (" + wx.str() + ", " +
                   wy.str() + ")";
    }
    return "?";
}

namespace {

QuadVal half(const QuadVal& lo, const QuadVal& hi) {
    return (lo + hi) * QuadVal(Rat(1, 2));
}

// Cross-section of the region over the open x-slab (x0, x1): an interval
// [lo, hi] on the y axis, or nothing. Slab boundaries always include every
// region edge, so the cross-section is constant over the slab.
std::optional<std::pair<QuadVal, QuadVal>> cross_section(const Region& region,
                                                         const QuadVal& x0,
                                                         const QuadVal& x1) {
    if (const Rect* r = std::get_if<Rect>(&region)) {
        if (r->x <= x0 && x1 <= r->x + r->w)
            return std::make_pair(r->y, r->y + r->h);
        return std::nullopt;
    }
    const CornerShape& c = std::get<CornerShape>(region);
    if (x0.sign() < 0 || x1 > c.a) return std::nullopt;
    if (x1 <= c.a - c.c) return std::make_pair(QuadVal(), c.b);
    return std::make_pair(QuadVal(), c.b - c.d);
}

}  // namespace

VerifyReport verify_dissection(const Dissection& d) {
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        if (d.pieces[i].w.sign() <= 0 || d.pieces[i].h.sign() <= 0)
            throw std::invalid_argument("verify_dissection: piece " + std::to_string(i) +
                                        " has a non-positive side");
    }
    if (const CornerShape* c = std::get_if<CornerShape>(&d.region)) c->validate();

    // All distinct x coordinates of piece and region edges.
    std::vector<QuadVal> xs;
    if (const Rect* r = std::get_if<Rect>(&d.region)) {
        xs.push_back(r->x);
        xs.push_back(r->x + r->w);
    } else {
        const CornerShape& c = std::get<CornerShape>(d.region);
        xs.push_back(QuadVal());
        xs.push_back(c.a - c.c);
        xs.push_back(c.a);
    }
    for (const Rect& p : d.pieces) {
        xs.push_back(p.x);
        xs.push_back(p.x + p.w);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    struct Interval {
        QuadVal lo, hi;
        std::size_t piece;
    };

    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const QuadVal& x0 = xs[k];
        const QuadVal& x1 = xs[k + 1];
        QuadVal xmid = half(x0, x1);

        std::vector<Interval> spans;
        for (std::size_t i = 0; i < d.pieces.size(); ++i) {
            const Rect& p = d.pieces[i];
            if (p.x <= x0 && x1 <= p.x + p.w)
                spans.push_back({p.y, p.y + p.h, i});
        }
        auto section = cross_section(d.region, x0, x1);

        if (!section) {
            if (!spans.empty()) {
                const Interval& s = spans.front();
                return VerifyReport::outside(s.piece, xmid, half(s.lo, s.hi));
            }
            continue;
        }
        std::sort(spans.begin(), spans.end(), [](const Interval& a, const Interval& b) {
            if (a.lo != b.lo) return a.lo < b.lo;
            if (a.hi != b.hi) return a.hi < b.hi;
            return a.piece < b.piece;
        });

        // Walk the interval system upward; it must tile [section.lo, section.hi].
        QuadVal cursor = section->first;
        std::size_t owner = 0;  // piece whose interval ends at the cursor
        bool have_owner = false;
        for (const Interval& s : spans) {
            if (s.lo < section->first)
                return VerifyReport::outside(s.piece, xmid, half(s.lo, std::min(s.hi, section->first)));
            if (s.hi > section->second)
                return VerifyReport::outside(s.piece, xmid, half(std::max(s.lo, section->second), s.hi));
            if (s.lo < cursor)
                return VerifyReport::overlap(have_owner ? owner : s.piece, s.piece, xmid,
                                             half(s.lo, std::min(s.hi, cursor)));
            if (s.lo > cursor)
                return VerifyReport::gap(xmid, half(cursor, s.lo));
            cursor = s.hi;
            owner = s.piece;
            have_owner = true;
        }
        if (cursor < section->second)
            return VerifyReport::gap(xmid, half(cursor, section->second));
    }
    return VerifyReport::ok();
}

GroupReport verify_square_grouping(const Dissection& d) {
    VerifyReport base = verify_dissection(d);
    if (!base.is_ok())
        throw std::invalid_argument("verify_square_grouping: region dissection invalid: " +
                                    base.str());

    std::vector<int> seen(d.pieces.size(), 0);
    for (const PieceGroup& g : d.groups) {
        for (const GroupMember& m : g.members) {
            if (m.piece >= d.pieces.size())
                throw std::invalid_argument("verify_square_grouping: member references piece " +
                                            std::to_string(m.piece) + " out of range");
            ++seen[m.piece];
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] != 1)
            throw std::invalid_argument("verify_square_grouping: piece " + std::to_string(i) +
                                        " appears in " + std::to_string(seen[i]) +
                                        " groups; the groups must partition the pieces");
    }

    for (std::size_t gi = 0; gi < d.groups.size(); ++gi) {
        const PieceGroup& g = d.groups[gi];
        if (g.side.sign() <= 0) return {false, gi, "square side is not positive"};
        Dissection inside;
        inside.region = Rect{QuadVal(), QuadVal(), g.side, g.side};
        for (const GroupMember& m : g.members) {
            const Rect& src = d.pieces[m.piece];
            Rect placed{m.x, m.y, m.transposed ? src.h : src.w, m.transposed ? src.w : src.h};
            inside.pieces.push_back(placed);
        }
        VerifyReport r = verify_dissection(inside);
        if (!r.is_ok()) return {false, gi, r.str()};
    }
    return {};
}

}  // namespace sqtile
