#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqtile/lattice.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace sqtile;
using namespace sqtile::testutil;

TEST_CASE("lattice generators in the frame") {
    LatticeSpec lat{qv(2, 1, 3), LatticeMode::G, Direction{qv(2, 1, 3), qv(1)}};
    auto [g1x, g1y] = lat.g1();
    auto [g2x, g2y] = lat.g2();
    CHECK(g1x == qv(1));
    CHECK(g1y == qv(2, 1, 3));
    CHECK(g2x == -(qv(2, 1, 3) * qv(2, 1, 3)));
    CHECK(g2y == qv(2, 1, 3));
    // det = (p^2 + q^2) lambda
    CHECK(lat.det() == (lat.frame.p * lat.frame.p + lat.frame.q * lat.frame.q) * lat.lambda);

    LatticeSpec doubled = lat;
    doubled.mode = LatticeMode::TwoG;
    CHECK(doubled.det() == qv(4) * lat.det());
}

TEST_CASE("the reference grid tiling verifies") {
    TilingInstance t = grid_tiling();
    CHECK(verify_periodic_tiling(t).is_ok());
    CHECK(verify_tiling(t).is_ok());
    CHECK_THROWS_AS(verify_wrapping(t), std::invalid_argument);

    SUBCASE("displaced square overlaps") {
        TilingInstance bad = t;
        bad.squares[3].x = bad.squares[3].x + QuadVal(Rat(1, 4));
        TilingReport rep = verify_periodic_tiling(bad);
        REQUIRE(rep.kind == TilingReport::Kind::Overlap);
        // the witness lies inside both offending images
        PlacedSquare image = rep.elem.apply(bad.squares[rep.j]);
        const PlacedSquare& si = bad.squares[rep.i];
        CHECK(si.x < rep.wx);
        CHECK(rep.wx < si.x + si.side);
        CHECK(image.x < rep.wx);
        CHECK(rep.wx < image.x + image.side);
    }

    SUBCASE("removed square loses area") {
        TilingInstance bad = t;
        bad.squares.pop_back();
        TilingReport rep = verify_periodic_tiling(bad);
        REQUIRE(rep.kind == TilingReport::Kind::AreaMismatch);
        CHECK(rep.expected_area == QuadVal(Rat(3, 2)));
        CHECK(rep.actual_area == QuadVal(Rat(5, 4)));
    }

    SUBCASE("duplicated square added on top changes the area") {
        TilingInstance bad = t;
        bad.squares.push_back(bad.squares[0]);
        CHECK(verify_periodic_tiling(bad).kind == TilingReport::Kind::AreaMismatch);
    }

    SUBCASE("duplicate replacing an equal-area square collides") {
        TilingInstance bad = t;
        bad.squares[1] = bad.squares[0];
        TilingReport rep = verify_periodic_tiling(bad);
        REQUIRE(rep.kind == TilingReport::Kind::Overlap);
        CHECK(rep.i == 0);
        CHECK(rep.j == 1);
        CHECK(!rep.elem.reflected);
        CHECK(rep.elem.tx.is_zero());
        CHECK(rep.elem.ty.is_zero());
    }

    SUBCASE("verdicts are invariant under lattice translation and permutation") {
        Rng rng(2718);
        auto [g1x, g1y] = t.lattice.g1();
        auto [g2x, g2y] = t.lattice.g2();
        TilingInstance moved = t;
        for (PlacedSquare& s : moved.squares) {
            s.x = s.x + g1x * qv(2) - g2x;
            s.y = s.y + g1y * qv(2) - g2y;
        }
        CHECK(verify_periodic_tiling(moved).is_ok());
        std::shuffle(moved.squares.begin(), moved.squares.end(), rng);
        CHECK(verify_periodic_tiling(moved).is_ok());
    }

    SUBCASE("widening the window never changes the verdict") {
        CHECK(verify_periodic_tiling(t, Rat(2)).is_ok());
        CHECK(verify_periodic_tiling(t, Rat(3)).is_ok());
        TilingInstance bad = t;
        bad.squares[3].x = bad.squares[3].x + QuadVal(Rat(1, 4));
        CHECK(verify_periodic_tiling(bad, Rat(1)).kind == TilingReport::Kind::Overlap);
        CHECK(verify_periodic_tiling(bad, Rat(2)).kind == TilingReport::Kind::Overlap);
        CHECK_THROWS_AS(verify_periodic_tiling(t, Rat(1, 2)), std::invalid_argument);
    }
}

TEST_CASE("tilted frames: the staircase column tiles and wraps") {
    // lambda = 2, direction (1, 1): generators (1,1) and (-2,2). The
    // degenerate corner is the 1 x 4 column, which tiles the plane: its
    // translates fill each integer column with vertical period 4.
    TilingInstance t;
    t.lattice.lambda = qv(2);
    t.lattice.mode = LatticeMode::G;
    t.lattice.frame = Direction{qv(1), qv(1)};
    t.kind = TilingKind::Plane;
    for (int y = 0; y < 4; ++y) t.squares.push_back({QuadVal(), qv(y), qv(1)});
    CHECK(verify_periodic_tiling(t).is_ok());
    CHECK(verify_periodic_tiling(t, Rat(2)).is_ok());

    CornerShape corner = corner_shape(t.lattice.lambda, t.lattice.frame, t.lattice.mode);
    CHECK(corner.a == qv(1));
    CHECK(corner.b == qv(4));
    Dissection d = induce_corner_dissection(t, corner, QuadVal(), QuadVal());
    CHECK(d.pieces.size() == 4);
    CHECK(d.groups.size() == 4);
    CHECK(verify_dissection(d).is_ok());
    CHECK(verify_square_grouping(d).ok);
    // a shifted placement still slices into a perfect dissection
    Dissection shifted =
        induce_corner_dissection(t, corner, QuadVal(Rat(1, 3)), QuadVal(Rat(-5, 7)));
    CHECK(verify_dissection(shifted).is_ok());
    CHECK(verify_square_grouping(shifted).ok);

    TilingInstance bad = t;
    bad.squares[2].y = bad.squares[2].y + QuadVal(Rat(1, 3));
    CHECK(verify_periodic_tiling(bad).kind == TilingReport::Kind::Overlap);

    // Wrapping analogue on the doubled lattice: the 1 x 8 column has the
    // fundamental area 2(p^2+q^2)lambda = 8; translations fill the even
    // columns, reflections the odd ones.
    TilingInstance w;
    w.lattice.lambda = qv(2);
    w.lattice.mode = LatticeMode::TwoG;
    w.lattice.frame = Direction{qv(1), qv(1)};
    w.kind = TilingKind::Wrap;
    for (int y = 0; y < 8; ++y) w.squares.push_back({QuadVal(), qv(y), qv(1)});
    CHECK(verify_wrapping(w).is_ok());
    CHECK(verify_wrapping(w, Rat(2)).is_ok());

    CornerShape wcorner = corner_shape(w.lattice.lambda, w.lattice.frame, w.lattice.mode);
    CHECK(wcorner.a == qv(2));
    CHECK(wcorner.b == qv(8));
    Dissection wd = induce_corner_dissection(w, wcorner, QuadVal(), QuadVal());
    CHECK(verify_dissection(wd).is_ok());
    CHECK(verify_square_grouping(wd).ok);
    CHECK(wd.groups.size() == 16);  // 8 squares, translated and reflected

    TilingInstance wbad = w;
    wbad.squares[0].x = wbad.squares[0].x + QuadVal(Rat(1, 2));
    CHECK(verify_wrapping(wbad).kind == TilingReport::Kind::Overlap);
}

TEST_CASE("wrapping verdicts survive conjugation by half-lattice translations") {
    // Translating all squares by any node of the plain lattice (half the
    // doubled one) conjugates the complex-equivalence group into itself.
    TilingInstance t = unit_wrapping();
    for (auto [vx, vy] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 1}, {-2, 3}}) {
        TilingInstance moved = t;
        for (PlacedSquare& s : moved.squares) {
            s.x = s.x + qv(vx);
            s.y = s.y + qv(vy);
        }
        CHECK(verify_wrapping(moved).is_ok());
    }
}

TEST_CASE("random rational grids verify and random mutations fail") {
    Rng rng(90210);
    for (int trial = 0; trial < 25; ++trial) {
        long p = 1 + static_cast<long>(rng() % 4);
        long q = 1 + static_cast<long>(rng() % 4);
        long k = 1 + static_cast<long>(rng() % 2);
        // cell 1 x p/q packed by a (kq x kp) grid of squares of side 1/(kq)
        TilingInstance t;
        t.lattice.lambda = QuadVal(Rat(p, q));
        t.lattice.mode = LatticeMode::G;
        t.lattice.frame = Direction{QuadVal(), qv(1)};
        t.kind = TilingKind::Plane;
        Rat side(1, k * q);
        for (long i = 0; i < k * q; ++i)
            for (long j = 0; j < k * p; ++j)
                t.squares.push_back(
                    {QuadVal(Rat(i, k * q)), QuadVal(Rat(j, k * q)), QuadVal(side)});
        REQUIRE(verify_periodic_tiling(t).is_ok());

        // Displacing one square by n/7 (never a multiple of the side for
        // kq, kp <= 8) breaks the tiling exactly when the grid has at
        // least two squares along that axis; a square spanning the full
        // cell width (or height) slides freely, since each row (column)
        // re-meshes with its own lattice translates.
        std::size_t victim = rng() % t.squares.size();
        Rat eps(1 + static_cast<long>(rng() % 5), 7);

        TilingInstance bady = t;
        bady.squares[victim].y = bady.squares[victim].y + QuadVal(eps);
        CHECK(verify_periodic_tiling(bady).is_ok() == (k * p == 1));

        TilingInstance badx = t;
        badx.squares[victim].x = badx.squares[victim].x + QuadVal(eps);
        CHECK(verify_periodic_tiling(badx).is_ok() == (k * q == 1));
    }
}

TEST_CASE("an irrational cell cannot be filled by the wrong area") {
    TilingInstance t;
    t.lattice.lambda = qv(0, 1, 2);
    t.lattice.frame = Direction{QuadVal(), qv(1)};
    t.kind = TilingKind::Plane;
    t.squares.push_back({QuadVal(), QuadVal(), qv(1)});
    TilingReport rep = verify_periodic_tiling(t);
    REQUIRE(rep.kind == TilingReport::Kind::AreaMismatch);
    CHECK(rep.expected_area == qv(0, 1, 2));
    CHECK(rep.actual_area == qv(1));
}

TEST_CASE("group images within a window") {
    TilingInstance t = grid_tiling();
    PlacedSquare s = t.squares[0];  // 1/2-square at the origin

    auto identity_only = group_images(s, t.lattice, TilingKind::Plane, QuadVal());
    REQUIRE(identity_only.size() == 1);
    CHECK(identity_only[0].x == s.x);
    CHECK(identity_only[0].y == s.y);

    auto nine = group_images(s, t.lattice, TilingKind::Plane, qv(1));
    CHECK(nine.size() == 9);

    // reflection about the origin node maps (x0, y0) to (-x0-side, -y0-side)
    LatticeSpec wrap_lat{qv(1), LatticeMode::TwoG, Direction{QuadVal(), qv(1)}};
    PlacedSquare anchored{QuadVal(Rat(1, 3)), QuadVal(Rat(1, 5)), qv(1)};
    auto images = group_images(anchored, wrap_lat, TilingKind::Wrap, qv(2));
    bool found_origin_reflection = false;
    for (const PlacedSquare& img : images) {
        if (img.x == QuadVal(Rat(-4, 3)) && img.y == QuadVal(Rat(-6, 5)))
            found_origin_reflection = true;
    }
    CHECK(found_origin_reflection);
}

TEST_CASE("two unit squares wrap the unit rectangle") {
    TilingInstance t = unit_wrapping();
    CHECK(verify_wrapping(t).is_ok());
    CHECK(verify_wrapping(t, Rat(2)).is_ok());

    SUBCASE("a square listed twice collides under the identity") {
        TilingInstance bad = t;
        bad.squares[1] = bad.squares[0];
        TilingReport rep = verify_wrapping(bad);
        REQUIRE(rep.kind == TilingReport::Kind::Overlap);
        CHECK(rep.i == 0);
        CHECK(rep.j == 1);
        CHECK(!rep.elem.reflected);
    }

    SUBCASE("wrong total area") {
        TilingInstance bad = t;
        bad.squares.pop_back();
        TilingReport rep = verify_wrapping(bad);
        REQUIRE(rep.kind == TilingReport::Kind::AreaMismatch);
        CHECK(rep.expected_area == qv(2));  // half of the doubled cell
        CHECK(rep.actual_area == qv(1));
    }

    SUBCASE("a square centered on a lattice node overlaps its own reflection") {
        TilingInstance bad = t;
        // center the first square on the node (1, 0): anchor (1/2, -1/2)
        bad.squares[0] = {QuadVal(Rat(1, 2)), QuadVal(Rat(-1, 2)), qv(1)};
        bad.squares[1] = {QuadVal(Rat(5, 2)), QuadVal(Rat(1, 2)), qv(1)};
        TilingReport rep = verify_wrapping(bad);
        REQUIRE(rep.kind == TilingReport::Kind::Overlap);
        CHECK(rep.elem.reflected);
    }
}

TEST_CASE("induced corner dissection of the grid tiling") {
    TilingInstance t = grid_tiling();
    CornerShape corner = corner_shape(t.lattice.lambda, t.lattice.frame, t.lattice.mode);
    CHECK(corner.a == qv(1));
    CHECK(corner.b == QuadVal(Rat(3, 2)));

    Dissection d = induce_corner_dissection(t, corner, QuadVal(), QuadVal());
    CHECK(d.pieces.size() == 6);
    CHECK(d.groups.size() == 6);
    CHECK(verify_dissection(d).is_ok());
    CHECK(verify_square_grouping(d).ok);

    // exact bookkeeping: piece areas sum to the region, group areas to
    // one square each
    QuadVal total;
    for (const Rect& p : d.pieces) total += p.w * p.h;
    CHECK(total == region_area(d.region));
    for (const PieceGroup& g : d.groups) {
        QuadVal area;
        for (const GroupMember& m : g.members) {
            const Rect& src = d.pieces[m.piece];
            area += src.w * src.h;
        }
        CHECK(area == g.side * g.side);
    }
}

TEST_CASE("induced dissection with a shifted corner splits pieces across images") {
    TilingInstance t = grid_tiling();
    CornerShape corner = corner_shape(t.lattice.lambda, t.lattice.frame, t.lattice.mode);
    Dissection d = induce_corner_dissection(t, corner, QuadVal(Rat(1, 4)), QuadVal(Rat(1, 8)));
    CHECK(d.pieces.size() > 6);
    CHECK(d.groups.size() == 6);
    CHECK(verify_dissection(d).is_ok());
    CHECK(verify_square_grouping(d).ok);
}

TEST_CASE("a corner equal to one square induces a single piece") {
    TilingInstance t;
    t.lattice.lambda = qv(1);
    t.lattice.mode = LatticeMode::G;
    t.lattice.frame = Direction{QuadVal(), qv(1)};
    t.kind = TilingKind::Plane;
    t.squares.push_back({QuadVal(), QuadVal(), qv(1)});
    REQUIRE(verify_periodic_tiling(t).is_ok());

    CornerShape corner{qv(1), qv(1), QuadVal(), QuadVal()};
    Dissection d = induce_corner_dissection(t, corner, QuadVal(), QuadVal());
    CHECK(d.pieces.size() == 1);
    CHECK(d.groups.size() == 1);
    CHECK(verify_dissection(d).is_ok());
    CHECK(verify_square_grouping(d).ok);
}

TEST_CASE("induction refuses tilings that do not verify") {
    TilingInstance bad = grid_tiling();
    bad.squares.pop_back();
    CornerShape corner{qv(1), QuadVal(Rat(3, 2)), QuadVal(), QuadVal()};
    CHECK_THROWS_AS(induce_corner_dissection(bad, corner, QuadVal(), QuadVal()),
                    std::invalid_argument);
}

TEST_CASE("induced dissection of a wrapping doubles the groups") {
    TilingInstance t = unit_wrapping();
    // corner for the doubled lattice, axis frame: the 2 x 2 rectangle
    CornerShape corner = corner_shape(t.lattice.lambda, t.lattice.frame, t.lattice.mode);
    CHECK(corner.a == qv(2));
    CHECK(corner.b == qv(2));

    Dissection d = induce_corner_dissection(t, corner, QuadVal(), QuadVal());
    CHECK(verify_dissection(d).is_ok());
    CHECK(verify_square_grouping(d).ok);
    // every square appears once translated and once reflected
    CHECK(d.groups.size() == 4);
    QuadVal total;
    for (const Rect& p : d.pieces) total += p.w * p.h;
    CHECK(total == qv(4));
}
