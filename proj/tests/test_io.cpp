#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqtile/io.hpp"
#include "sqtile/svg.hpp"
#include "test_util.hpp"

using namespace sqtile;
using namespace sqtile::testutil;

TEST_CASE("tiling files round-trip byte-identically") {
    TilingInstance t = grid_tiling();
    std::string one = serialize_tiling(t);
    TilingInstance back = parse_tiling(one);
    CHECK(serialize_tiling(back) == one);
    CHECK(back.squares.size() == t.squares.size());
    CHECK(back.lattice.lambda == t.lattice.lambda);
    CHECK(back.kind == TilingKind::Plane);
    CHECK(back.lattice.mode == LatticeMode::G);

    TilingInstance w = unit_wrapping();
    std::string two = serialize_tiling(w);
    TilingInstance wback = parse_tiling(two);
    CHECK(serialize_tiling(wback) == two);
    CHECK(wback.kind == TilingKind::Wrap);
    CHECK(wback.lattice.mode == LatticeMode::TwoG);

    // irrational coordinates survive exactly
    TilingInstance ir;
    ir.lattice.lambda = qv(2, 1, 3);
    ir.lattice.frame = Direction{qv(2, 1, 3), qv(1)};
    ir.kind = TilingKind::Plane;
    ir.squares.push_back({qv(7, -4, 3), QuadVal(Rat(1, 2)), qv(1)});
    std::string three = serialize_tiling(ir);
    TilingInstance irback = parse_tiling(three);
    CHECK(serialize_tiling(irback) == three);
    CHECK(irback.squares[0].x == qv(7, -4, 3));
}

TEST_CASE("dissection files round-trip byte-identically") {
    LiteralContext ctx{Rat(3), qv(2, 1, 3)};
    Dissection d;
    d.region = CornerShape{qv(2), qv(2), qv(1), qv(1)};
    d.pieces = {Rect{QuadVal(), QuadVal(), qv(1), qv(1)},
                Rect{qv(1), QuadVal(), qv(1), qv(1)},
                Rect{QuadVal(), qv(1), qv(1), qv(1)}};
    d.groups = {PieceGroup{qv(1), {GroupMember{0, QuadVal(), QuadVal(), false}}},
                PieceGroup{qv(1), {GroupMember{1, QuadVal(), QuadVal(), true}}},
                PieceGroup{qv(1), {GroupMember{2, QuadVal(), QuadVal(), false}}}};
    std::string one = serialize_dissection(d);
    Dissection back = parse_dissection(one, ctx);
    CHECK(serialize_dissection(back) == one);
    CHECK(back.groups[1].members[0].transposed);
    CHECK(std::get<CornerShape>(back.region).a == qv(2));

    // rect region without groups
    Dissection r;
    r.region = Rect{QuadVal(), QuadVal(), qv(1), qv(2, 1, 3)};
    r.pieces = {Rect{QuadVal(), QuadVal(), qv(1), qv(2, 1, 3)}};
    std::string two = serialize_dissection(r);
    CHECK(serialize_dissection(parse_dissection(two, ctx)) == two);
}

TEST_CASE("json rejects malformed input") {
    LiteralContext ctx{Rat(3), std::nullopt};
    CHECK_THROWS_AS(parse_tiling("{}"), std::exception);
    CHECK_THROWS_AS(parse_tiling(R"({"s":"3","lambda":"2+1*w","mode":"spiral",
        "direction":{"p":"0","q":"1"},"squares":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_tiling(R"({"s":"3","lambda":"7/0","mode":"plane",
        "direction":{"p":"0","q":"1"},"squares":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_dissection(R"({"pieces":[]})", ctx), std::invalid_argument);
    CHECK_THROWS_AS(parse_dissection(R"({"region":{"kind":"blob"},"pieces":[]})", ctx),
                    std::invalid_argument);
}

TEST_CASE("sweep reports serialize with exact fields") {
    SweepReport rep = sweep_directions(qv(2, 1, 3), 1);
    std::string text = serialize_sweep(rep);
    CHECK(text.find("\"lambda\": \"2+1*w\"") != std::string::npos);
    CHECK(text.find("\"classification\": \"feasible\"") != std::string::npos);
    CHECK(text.find("\"coeffs\"") != std::string::npos);
    CHECK(text.find("\"violations\": []") != std::string::npos);

    SweepReport bad = sweep_directions(qv(1, 1, 2), 1);
    std::string text2 = serialize_sweep(bad);
    CHECK(text2.find("\"classification\": \"infeasible\"") != std::string::npos);
    CHECK(text2.find("\"certificate\"") != std::string::npos);
}

TEST_CASE("svg output is deterministic") {
    TilingInstance t = grid_tiling();
    std::string svg1 = render_tiling_svg(t);
    std::string svg2 = render_tiling_svg(t);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") == 0);
    CHECK(svg1.find("</svg>") != std::string::npos);
    // 6 colored squares per cell over a 3x3 block of cells, plus the canvas
    std::size_t rects = 0;
    for (std::size_t pos = svg1.find("<rect"); pos != std::string::npos;
         pos = svg1.find("<rect", pos + 1))
        ++rects;
    CHECK(rects == 6 * 9 + 1);

    QuadVal l = qv(2, 1, 3);
    CornerData cd = build_corner(l, Direction{l, qv(1)}, LatticeMode::G);
    std::string corner_svg = render_corner_svg(cd, Direction{l, qv(1)});
    CHECK(corner_svg == render_corner_svg(cd, Direction{l, qv(1)}));
    // labels carry the exact values
    CHECK(corner_svg.find("c = 7-4*w") != std::string::npos);

    CornerData degen = build_corner(l, Direction{QuadVal(), qv(1)}, LatticeMode::G);
    std::string degen_svg = render_corner_svg(degen, Direction{QuadVal(), qv(1)});
    CHECK(degen_svg.find("degenerate rectangle") != std::string::npos);

    Dissection d = induce_corner_dissection(
        t, corner_shape(t.lattice.lambda, t.lattice.frame, t.lattice.mode), QuadVal(), QuadVal());
    std::string dsvg = render_dissection_svg(d);
    CHECK(dsvg == render_dissection_svg(d));
    CHECK(dsvg.find("<polygon") != std::string::npos);

    std::string wsvg = render_tiling_svg(unit_wrapping());
    CHECK(wsvg == render_tiling_svg(unit_wrapping()));
}
