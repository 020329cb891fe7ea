// sqtile: exact analysis of periodic square tilings of the plane with
// periods (1, 0) and (0, lambda), and of two-sided square wrappings of
// the 1 x lambda rectangle.
//
// Exit codes: 0 success / feasible / verified, 1 verification failed or
// infeasible (certificate printed), 2 input error, 3 consistency
// violation in a sweep (indicates a machinery bug, not an input problem).

#include <CLI11.hpp>

#include "sqtile/classify.hpp"
#include "sqtile/corner.hpp"
#include "sqtile/io.hpp"
#include "sqtile/lattice.hpp"
#include "sqtile/literal.hpp"
#include "sqtile/regions.hpp"
#include "sqtile/svg.hpp"
#include "sqtile/xarea.hpp"

#include <iostream>
#include <string>

namespace {

using namespace sqtile;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;
constexpr int kViolation = 3;

struct CommonOpts {
    std::string s = "0";
    std::string lambda;
    std::string dir;
    std::string input;
    std::string out;
    std::string placement = "0,0";
    std::string mode = "g";
    long coeff_range = 2;
    long max_denominator = 64;
    std::string window_scale = "1";
};

LiteralContext make_context(const CommonOpts& opt, bool need_lambda) {
    LiteralContext ctx{Rat::parse(opt.s), std::nullopt};
    if (!opt.lambda.empty()) {
        QuadVal lambda = parse_quad(opt.lambda, ctx);
        if (lambda.sign() <= 0) throw std::invalid_argument("lambda must be positive");
        ctx.lambda = lambda;
    } else if (need_lambda) {
        throw std::invalid_argument("--lambda is required for this subcommand");
    }
    return ctx;
}

LatticeMode parse_mode(const std::string& mode) {
    if (mode == "g") return LatticeMode::G;
    if (mode == "2g") return LatticeMode::TwoG;
    throw std::invalid_argument("--mode must be g or 2g");
}

int run_classify(const CommonOpts& opt) {
    LiteralContext ctx = make_context(opt, true);
    Classification c = classify_lambda(*ctx.lambda, opt.max_denominator);
    std::cout << c.str() << "\n";
    return c.verdict == Classification::Verdict::Infeasible ? kFailed : kOk;
}

int run_corner(const CommonOpts& opt) {
    LiteralContext ctx = make_context(opt, true);
    if (opt.dir.empty()) throw std::invalid_argument("--dir is required");
    auto [vx, vy] = parse_direction(opt.dir, ctx);
    Direction dir = normalize_direction(vx, vy);
    CornerData cd = build_corner(*ctx.lambda, dir, parse_mode(opt.mode));
    std::cout << "direction: (" << dir.str() << ")\n";
    std::cout << "a = " << cd.a.str() << "\nb = " << cd.b.str() << "\nc = " << cd.c.str()
              << "\nd = " << cd.d.str() << "\ne = " << cd.e.str() << "\nf = " << cd.f.str()
              << "\nm = " << cd.m.get_str() << "\n";
    std::cout << "d0 = " << cd.d0.str() << ", d1 = " << cd.d1.str() << ", e0 = " << cd.e0.str()
              << ", e1 = " << cd.e1.str() << "\n";
    QuadPoly s = corner_xarea(cd);
    std::cout << "x-area: " << s.str() << "\n";
    return kOk;
}

int run_xarea(const CommonOpts& opt) {
    LiteralContext ctx = make_context(opt, true);
    if (opt.input.empty()) throw std::invalid_argument("--input is required");
    Dissection d = parse_dissection(read_file(opt.input), ctx);
    VerifyReport rep = verify_dissection(d);
    if (!rep.is_ok()) {
        std::cout << rep.str() << "\n";
        return kFailed;
    }
    if (!d.groups.empty()) {
        GroupReport gr = verify_square_grouping(d);
        if (!gr.ok) {
            std::cout << gr.str() << "\n";
            return kFailed;
        }
    }
    // x-areas are taken over the anchor a = 1; region sides and pieces
    // must be good for the declared lambda.
    FieldBasis basis(QuadVal(Rat(1)), *ctx.lambda);
    QuadPoly s = xarea_sum(d, basis);
    std::cout << "x-area: " << s.str() << "\n";
    std::cout << analyze_nonnegativity(s).str() << "\n";
    return kOk;
}

int run_verify(const CommonOpts& opt) {
    if (opt.input.empty()) throw std::invalid_argument("--input is required");
    TilingInstance t = parse_tiling(read_file(opt.input));
    TilingReport rep = verify_tiling(t, Rat::parse(opt.window_scale));
    std::cout << rep.str() << "\n";
    return rep.is_ok() ? kOk : kFailed;
}

int run_induce(const CommonOpts& opt) {
    if (opt.input.empty()) throw std::invalid_argument("--input is required");
    if (opt.out.empty()) throw std::invalid_argument("--out is required");
    TilingInstance t = parse_tiling(read_file(opt.input));
    LiteralContext ctx{t.lattice.lambda.is_rational() ? Rat(0) : t.lattice.lambda.radicand(),
                       t.lattice.lambda};
    auto [px, py] = parse_direction(opt.placement, ctx);
    CornerShape corner = corner_shape(t.lattice.lambda, t.lattice.frame, t.lattice.mode);
    Dissection d;
    try {
        d = induce_corner_dissection(t, corner, px, py);
    } catch (const ArrangementNotRectangular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    write_file(opt.out, serialize_dissection(d));
    std::cout << "induced dissection: " << d.pieces.size() << " pieces in " << d.groups.size()
              << " groups -> " << opt.out << "\n";
    return kOk;
}

int run_sweep(const CommonOpts& opt) {
    LiteralContext ctx = make_context(opt, true);
    SweepReport report = sweep_directions(*ctx.lambda, static_cast<int>(opt.coeff_range));
    if (!opt.out.empty()) write_file(opt.out, serialize_sweep(report));
    std::cout << "lambda " << ctx.lambda->str() << ": "
              << (report.certificate ? "infeasible, " + report.certificate->str() : "feasible")
              << "\n";
    for (const DirectionRecord& rec : report.records) {
        std::cout << "  (" << rec.dir.str() << "): S = " << rec.s.str() << ", "
                  << rec.nonneg.str();
        if (rec.witness) std::cout << ", witness " << rec.witness->str();
        std::cout << "\n";
    }
    for (const std::string& v : report.violations)
        std::cerr << "CONSISTENCY VIOLATION: " << v << "\n";
    return report.violations.empty() ? kOk : kViolation;
}

int run_render(const CommonOpts& opt) {
    if (opt.out.empty()) throw std::invalid_argument("--out is required");
    std::string svg;
    if (!opt.input.empty()) {
        std::string text = read_file(opt.input);
        // Tiling files carry "squares"; dissection files carry "pieces".
        if (text.find("\"squares\"") != std::string::npos) {
            svg = render_tiling_svg(parse_tiling(text));
        } else {
            LiteralContext ctx = make_context(opt, true);
            svg = render_dissection_svg(parse_dissection(text, ctx));
        }
    } else {
        LiteralContext ctx = make_context(opt, true);
        if (opt.dir.empty()) throw std::invalid_argument("--dir or --input is required");
        auto [vx, vy] = parse_direction(opt.dir, ctx);
        Direction dir = normalize_direction(vx, vy);
        CornerData cd = build_corner(*ctx.lambda, dir, parse_mode(opt.mode));
        svg = render_corner_svg(cd, dir);
    }
    write_file(opt.out, svg);
    std::cout << "wrote " << opt.out << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact machinery for periodic square tilings and two-sided wrappings"};
    app.require_subcommand(1);

    CommonOpts opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--s", opt.s, "radicand s of the working field Q(sqrt(s))");
        cmd->add_option("--lambda", opt.lambda, "aspect ratio, e.g. \"2+1*w\"");
        cmd->add_option("--dir", opt.dir, "direction \"p,q\" (components may use w and L)");
        cmd->add_option("--input", opt.input, "input JSON file");
        cmd->add_option("--out", opt.out, "output file");
        cmd->add_option("--mode", opt.mode, "lattice mode: g or 2g (default g)");
        cmd->add_option("--coeff-range", opt.coeff_range, "sweep coefficient range (default 2)");
        cmd->add_option("--max-denominator", opt.max_denominator,
                        "witness search denominator bound (default 64)");
        cmd->add_option("--window-scale", opt.window_scale,
                        "overlap window multiplier >= 1 (default 1)");
        cmd->add_option("--placement", opt.placement,
                        "corner origin \"x,y\" in frame coordinates (default 0,0)");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify lambda, print a witness or certificate");
    CLI::App* corner = app.add_subcommand("corner", "build the staircase corner for a direction");
    CLI::App* xarea = app.add_subcommand("xarea", "verify a dissection file and sum its x-areas");
    CLI::App* verify = app.add_subcommand("verify", "verify a tiling or wrapping instance");
    CLI::App* induce = app.add_subcommand("induce", "slice a corner along a verified tiling");
    CLI::App* sweep = app.add_subcommand("sweep", "analyze the corner x-area over many directions");
    CLI::App* render = app.add_subcommand("render", "draw a corner, tiling or dissection as SVG");
    for (CLI::App* cmd : {classify, corner, xarea, verify, induce, sweep, render}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(opt);
        if (corner->parsed()) return run_corner(opt);
        if (xarea->parsed()) return run_xarea(opt);
        if (verify->parsed()) return run_verify(opt);
        if (induce->parsed()) return run_induce(opt);
        if (sweep->parsed()) return run_sweep(opt);
        if (render->parsed()) return run_render(opt);
    } catch (const sqtile::WitnessNotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
