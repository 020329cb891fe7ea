#include "sqtile/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace sqtile {

namespace {

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                          "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac"};
constexpr int kPaletteSize = 10;

std::string fmt(double v) {
    if (v == 0) v = 0;  // avoid "-0"
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// World-to-view projection: fit the world box into a 640 x 640 canvas,
// y flipped so the world y axis points up.
class Canvas {
public:
    Canvas(double x0, double y0, double x1, double y1, double extent = 640.0, double margin = 24.0)
        : x0_(x0), y1_(y1), margin_(margin) {
        double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
        scale_ = std::min((extent - 2 * margin) / w, (extent - 2 * margin) / h);
        width_ = w * scale_ + 2 * margin;
        height_ = h * scale_ + 2 * margin;
    }

    double px(double x) const { return margin_ + (x - x0_) * scale_; }
    double py(double y) const { return margin_ + (y1_ - y) * scale_; }

    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& stroke = "#333333", double stroke_width = 1.0) {
        body_ += "  <rect x=\"" + fmt(px(x)) + "\" y=\"" + fmt(py(y + h)) + "\" width=\"" +
                 fmt(w * scale_) + "\" height=\"" + fmt(h * scale_) + "\" fill=\"" + fill +
                 "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) + "\"/>\n";
    }

    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill,
                 const std::string& stroke, double stroke_width) {
        body_ += "  <polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ += " ";
            body_ += fmt(px(pts[i].first)) + "," + fmt(py(pts[i].second));
        }
        body_ += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 fmt(stroke_width) + "\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0, bool dashed = false) {
        body_ += "  <line x1=\"" + fmt(px(x1)) + "\" y1=\"" + fmt(py(y1)) + "\" x2=\"" +
                 fmt(px(x2)) + "\" y2=\"" + fmt(py(y2)) + "\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + fmt(stroke_width) + "\"" +
                 (dashed ? " stroke-dasharray=\"4 3\"" : "") + "/>\n";
    }

    void dot(double x, double y, double r, const std::string& fill) {
        body_ += "  <circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"" + fmt(r) +
                 "\" fill=\"" + fill + "\"/>\n";
    }

    void text(double x, double y, const std::string& label, const std::string& anchor = "middle") {
        body_ += "  <text x=\"" + fmt(px(x)) + "\" y=\"" + fmt(py(y)) +
                 "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"" + anchor +
                 "\" fill=\"#111111\">" + label + "</text>\n";
    }

    std::string finish() const {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width_) +
               "\" height=\"" + fmt(height_) + "\" viewBox=\"0 0 " + fmt(width_) + " " +
               fmt(height_) + "\">\n  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n" +
               body_ + "</svg>\n";
    }

private:
    double x0_, y1_, scale_, width_, height_, margin_;
    std::string body_;
};

double frame_downscale(const Direction& dir) {
    // The unnormalized frame magnifies by |u|; undo it for display.
    return 1.0 / std::hypot(dir.p.to_double(), dir.q.to_double());
}

}  // namespace

std::string render_corner_svg(const CornerData& cd, const Direction& dir) {
    double k = frame_downscale(dir);
    double a = cd.a.to_double() * k, b = cd.b.to_double() * k;
    double c = cd.c.to_double() * k, d = cd.d.to_double() * k;

    bool degenerate = cd.shape().is_rectangle();
    std::vector<std::pair<double, double>> outline;
    if (degenerate) {
        outline = {{0, 0}, {a, 0}, {a, b}, {0, b}};
    } else {
        outline = {{0, 0}, {a, 0}, {a, b - d}, {a - c, b - d}, {a - c, b}, {0, b}};
    }
    // Neighboring corners of the staircase tiling, translated by the
    // lattice steps (a, d) and (e, f).
    double ee = cd.e.to_double() * k, ff = cd.f.to_double() * k;
    const std::pair<double, double> shifts[] = {{a, d}, {-a, -d}, {ee, ff}};

    double x0 = 0, y0 = 0, x1 = a, y1 = b;
    for (auto [tx, ty] : shifts) {
        for (auto [x, y] : outline) {
            x0 = std::min(x0, x + tx);
            y0 = std::min(y0, y + ty);
            x1 = std::max(x1, x + tx);
            y1 = std::max(y1, y + ty);
        }
    }
    double pad = 0.1 * std::max(x1 - x0, y1 - y0);
    Canvas cv(x0 - pad, y0 - pad, x1 + pad, y1 + pad);

    for (auto [tx, ty] : shifts) {
        std::vector<std::pair<double, double>> ghost;
        for (auto [x, y] : outline) ghost.emplace_back(x + tx, y + ty);
        cv.polygon(ghost, "none", "#b9c4d4", 1.0);
    }
    cv.polygon(outline, "#eef3fa", "#333333", 1.5);

    // Lattice nodes at the corner's vertices: the origin, (a, d), (c, b).
    cv.dot(0, 0, 3.5, "#c0392b");
    cv.dot(a, d, 3.5, "#c0392b");
    cv.dot(c, b, 3.5, "#c0392b");
    // Vertical lattice step (e, f) from the origin node.
    cv.line(0, 0, cd.e.to_double() * k, cd.f.to_double() * k, "#c0392b", 1.0, true);

    cv.text(a / 2, -0.4 * pad, "a = " + cd.a.str());
    cv.text(-0.15 * pad, b / 2, "b = " + cd.b.str(), "end");
    if (degenerate) {
        cv.text(a / 2, b + 0.3 * pad,
                "c = " + cd.c.str() + ", d = " + cd.d.str() + " (degenerate rectangle)");
    } else {
        cv.text(a - c / 2, b + 0.3 * pad, "c = " + cd.c.str());
        cv.text(a + 0.15 * pad, b - d / 2, "d = " + cd.d.str(), "start");
    }
    return cv.finish();
}

std::string render_tiling_svg(const TilingInstance& t) {
    double k = frame_downscale(t.lattice.frame);
    auto [g1x, g1y] = t.lattice.g1();
    auto [g2x, g2y] = t.lattice.g2();
    double ax = g1x.to_double() * k, ay = g1y.to_double() * k;
    double bx = g2x.to_double() * k, by = g2y.to_double() * k;

    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x); y0 = std::min(y0, y);
        x1 = std::max(x1, x); y1 = std::max(y1, y);
    };
    for (const PlacedSquare& s : t.squares) {
        for (int m = -1; m <= 1; ++m) {
            for (int n = -1; n <= 1; ++n) {
                double side = s.side.to_double() * k;
                double sx = s.x.to_double() * k + m * ax + n * bx;
                double sy = s.y.to_double() * k + m * ay + n * by;
                grow(sx, sy);
                grow(sx + side, sy + side);
                if (t.kind == TilingKind::Wrap) {
                    double rx = m * ax + n * bx - s.x.to_double() * k - side;
                    double ry = m * ay + n * by - s.y.to_double() * k - side;
                    grow(rx, ry);
                    grow(rx + side, ry + side);
                }
            }
        }
    }
    Canvas cv(x0, y0, x1, y1);

    // 3 x 3 block of lattice cells: translated copies of every square,
    // colored by square; reflected copies (wrappings) are drawn hollow.
    for (int m = -1; m <= 1; ++m) {
        for (int n = -1; n <= 1; ++n) {
            double tx = m * ax + n * bx, ty = m * ay + n * by;
            for (std::size_t i = 0; i < t.squares.size(); ++i) {
                const PlacedSquare& s = t.squares[i];
                double side = s.side.to_double() * k;
                cv.rect(s.x.to_double() * k + tx, s.y.to_double() * k + ty, side, side,
                        kPalette[i % kPaletteSize], "#222222", m == 0 && n == 0 ? 1.5 : 0.6);
            }
            if (t.kind == TilingKind::Wrap) {
                for (std::size_t i = 0; i < t.squares.size(); ++i) {
                    const PlacedSquare& s = t.squares[i];
                    double side = s.side.to_double() * k;
                    // x -> (m g1 + n g2) - x
                    double rx = tx - s.x.to_double() * k - side;
                    double ry = ty - s.y.to_double() * k - side;
                    cv.rect(rx, ry, side, side, "none", kPalette[i % kPaletteSize], 1.2);
                }
            }
        }
    }
    // Fundamental cell outline from the origin.
    cv.polygon({{0, 0}, {ax, ay}, {ax + bx, ay + by}, {bx, by}}, "none", "#c0392b", 1.2);
    return cv.finish();
}

std::string render_dissection_svg(const Dissection& d) {
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    std::vector<std::pair<double, double>> outline;
    if (const Rect* r = std::get_if<Rect>(&d.region)) {
        double rx = r->x.to_double(), ry = r->y.to_double();
        double rw = r->w.to_double(), rh = r->h.to_double();
        x0 = rx; y0 = ry; x1 = rx + rw; y1 = ry + rh;
        outline = {{rx, ry}, {rx + rw, ry}, {rx + rw, ry + rh}, {rx, ry + rh}};
    } else {
        const CornerShape& c = std::get<CornerShape>(d.region);
        double a = c.a.to_double(), b = c.b.to_double();
        double cc = c.c.to_double(), dd = c.d.to_double();
        x0 = 0; y0 = 0; x1 = a; y1 = b;
        if (c.is_rectangle())
            outline = {{0, 0}, {a, 0}, {a, b}, {0, b}};
        else
            outline = {{0, 0}, {a, 0}, {a, b - dd}, {a - cc, b - dd}, {a - cc, b}, {0, b}};
    }
    for (const Rect& p : d.pieces) {
        x0 = std::min(x0, p.x.to_double());
        y0 = std::min(y0, p.y.to_double());
        x1 = std::max(x1, p.x.to_double() + p.w.to_double());
        y1 = std::max(y1, p.y.to_double() + p.h.to_double());
    }
    Canvas cv(x0, y0, x1, y1);

    // Color pieces by the group that reassembles them (piece index when
    // the dissection carries no groups).
    std::vector<std::size_t> color(d.pieces.size());
    for (std::size_t i = 0; i < color.size(); ++i) color[i] = i;
    for (std::size_t g = 0; g < d.groups.size(); ++g)
        for (const GroupMember& m : d.groups[g].members)
            if (m.piece < color.size()) color[m.piece] = g;

    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const Rect& p = d.pieces[i];
        cv.rect(p.x.to_double(), p.y.to_double(), p.w.to_double(), p.h.to_double(),
                kPalette[color[i] % kPaletteSize], "#222222", 0.8);
    }
    cv.polygon(outline, "none", "#111111", 1.8);
    return cv.finish();
}

}  // namespace sqtile
