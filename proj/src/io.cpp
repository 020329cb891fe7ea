#include "sqtile/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sqtile {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string get_string(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw std::invalid_argument(std::string("json: missing string field \"") + key + "\"");
    return j[key].get<std::string>();
}

QuadVal get_quad(const ordered_json& j, const char* key, const LiteralContext& ctx) {
    return parse_quad(get_string(j, key), ctx);
}

ordered_json direction_json(const Direction& d) {
    return ordered_json{{"p", d.p.str()}, {"q", d.q.str()}};
}

}  // namespace

std::string serialize_tiling(const TilingInstance& t) {
    ordered_json j;
    // The radicand travels with the file so tiling inputs are self-contained.
    j["s"] = t.lattice.lambda.is_rational() ? Rat(0).str() : t.lattice.lambda.radicand().str();
    j["lambda"] = t.lattice.lambda.str();
    j["mode"] = t.kind == TilingKind::Plane ? "plane" : "wrap";
    j["direction"] = direction_json(t.lattice.frame);
    j["squares"] = ordered_json::array();
    for (const PlacedSquare& s : t.squares)
        j["squares"].push_back(
            ordered_json{{"x", s.x.str()}, {"y", s.y.str()}, {"side", s.side.str()}});
    return j.dump(2) + "\n";
}

TilingInstance parse_tiling(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text);
    LiteralContext ctx{Rat::parse(get_string(j, "s")), std::nullopt};
    TilingInstance t;
    t.lattice.lambda = get_quad(j, "lambda", ctx);
    ctx.lambda = t.lattice.lambda;
    std::string mode = get_string(j, "mode");
    if (mode == "plane") {
        t.kind = TilingKind::Plane;
        t.lattice.mode = LatticeMode::G;
    } else if (mode == "wrap") {
        t.kind = TilingKind::Wrap;
        t.lattice.mode = LatticeMode::TwoG;
    } else {
        throw std::invalid_argument("json: mode must be \"plane\" or \"wrap\"");
    }
    if (!j.contains("direction"))
        throw std::invalid_argument("json: missing \"direction\"");
    t.lattice.frame.p = get_quad(j["direction"], "p", ctx);
    t.lattice.frame.q = get_quad(j["direction"], "q", ctx);
    if (!j.contains("squares") || !j["squares"].is_array())
        throw std::invalid_argument("json: missing \"squares\" array");
    for (const ordered_json& sq : j["squares"])
        t.squares.push_back(
            {get_quad(sq, "x", ctx), get_quad(sq, "y", ctx), get_quad(sq, "side", ctx)});
    return t;
}

std::string serialize_dissection(const Dissection& d) {
    ordered_json j;
    if (const Rect* r = std::get_if<Rect>(&d.region)) {
        j["region"] = ordered_json{{"kind", "rect"}, {"w", r->w.str()}, {"h", r->h.str()}};
    } else {
        const CornerShape& c = std::get<CornerShape>(d.region);
        j["region"] = ordered_json{{"kind", "corner"},
                                   {"a", c.a.str()},
                                   {"b", c.b.str()},
                                   {"c", c.c.str()},
                                   {"d", c.d.str()}};
    }
    j["pieces"] = ordered_json::array();
    for (const Rect& p : d.pieces)
        j["pieces"].push_back(ordered_json{
            {"x", p.x.str()}, {"y", p.y.str()}, {"w", p.w.str()}, {"h", p.h.str()}});
    if (!d.groups.empty()) {
        j["groups"] = ordered_json::array();
        for (const PieceGroup& g : d.groups) {
            ordered_json members = ordered_json::array();
            for (const GroupMember& m : g.members)
                members.push_back(ordered_json{{"piece", m.piece},
                                               {"x", m.x.str()},
                                               {"y", m.y.str()},
                                               {"transposed", m.transposed}});
            j["groups"].push_back(ordered_json{{"side", g.side.str()}, {"members", members}});
        }
    }
    return j.dump(2) + "\n";
}

Dissection parse_dissection(const std::string& json_text, const LiteralContext& ctx) {
    ordered_json j = ordered_json::parse(json_text);
    Dissection d;
    if (!j.contains("region")) throw std::invalid_argument("json: missing \"region\"");
    const ordered_json& reg = j["region"];
    std::string kind = get_string(reg, "kind");
    if (kind == "rect") {
        d.region = Rect{QuadVal(), QuadVal(), get_quad(reg, "w", ctx), get_quad(reg, "h", ctx)};
    } else if (kind == "corner") {
        d.region = CornerShape{get_quad(reg, "a", ctx), get_quad(reg, "b", ctx),
                               get_quad(reg, "c", ctx), get_quad(reg, "d", ctx)};
    } else {
        throw std::invalid_argument("json: region kind must be \"rect\" or \"corner\"");
    }
    if (!j.contains("pieces") || !j["pieces"].is_array())
        throw std::invalid_argument("json: missing \"pieces\" array");
    for (const ordered_json& p : j["pieces"])
        d.pieces.push_back({get_quad(p, "x", ctx), get_quad(p, "y", ctx),
                            get_quad(p, "w", ctx), get_quad(p, "h", ctx)});
    if (j.contains("groups")) {
        for (const ordered_json& g : j["groups"]) {
            PieceGroup group;
            group.side = get_quad(g, "side", ctx);
            if (!g.contains("members") || !g["members"].is_array())
                throw std::invalid_argument("json: group without \"members\" array");
            for (const ordered_json& m : g["members"]) {
                if (!m.contains("piece") || !m["piece"].is_number_unsigned())
                    throw std::invalid_argument("json: member needs an unsigned \"piece\" index");
                GroupMember member;
                member.piece = m["piece"].get<std::size_t>();
                member.x = get_quad(m, "x", ctx);
                member.y = get_quad(m, "y", ctx);
                member.transposed = m.value("transposed", false);
                group.members.push_back(member);
            }
            d.groups.push_back(std::move(group));
        }
    }
    return d;
}

std::string serialize_sweep(const SweepReport& report) {
    ordered_json j;
    j["lambda"] = report.lambda.str();
    j["s"] = report.lambda.is_rational() ? Rat(0).str() : report.lambda.radicand().str();
    j["classification"] =
        report.certificate ? "infeasible" : "feasible";
    if (report.certificate) j["certificate"] = report.certificate->str();
    j["directions"] = ordered_json::array();
    for (const DirectionRecord& rec : report.records) {
        ordered_json r;
        r["direction"] = direction_json(rec.dir);
        r["corner"] = ordered_json{{"a", rec.corner.a.str()}, {"b", rec.corner.b.str()},
                                   {"c", rec.corner.c.str()}, {"d", rec.corner.d.str()},
                                   {"e", rec.corner.e.str()}, {"f", rec.corner.f.str()},
                                   {"m", rec.corner.m.get_str()}};
        r["coeffs"] = ordered_json{{"d0", rec.corner.d0.str()},
                                   {"d1", rec.corner.d1.str()},
                                   {"e0", rec.corner.e0.str()},
                                   {"e1", rec.corner.e1.str()}};
        r["case"] = rec.area_case.kind == AreaCase::Kind::Linear ? "linear" : "quadratic";
        r["S"] = ordered_json{{"c0", rec.s.c0.str()}, {"c1", rec.s.c1.str()},
                              {"c2", rec.s.c2.str()}};
        r["verdict"] = rec.nonneg.nonnegative ? "nonnegative" : "negative";
        if (!rec.nonneg.nonnegative) r["negative_at"] = rec.nonneg.witness.str();
        if (rec.witness)
            r["witness"] = ordered_json{{"p", rec.witness->p.str()},
                                        {"q", rec.witness->q.str()},
                                        {"r", rec.witness->r.str()}};
        else if (!rec.witness_note.empty())
            r["witness_note"] = rec.witness_note;
        j["directions"].push_back(r);
    }
    j["violations"] = report.violations;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace sqtile
