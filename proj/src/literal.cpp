#include "sqtile/literal.hpp"

#include <stdexcept>
#include <string>

namespace sqtile {

namespace {

[[noreturn]] void fail(std::string_view text, size_t pos, const std::string& what) {
    throw std::invalid_argument("literal: " + what + " at position " + std::to_string(pos) +
                                " in \"" + std::string(text) + "\"");
}

Rat scan_rat(std::string_view text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits) fail(text, start, "expected a number");
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t den = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den) fail(text, pos, "expected a denominator");
    }
    Rat r = Rat::parse(text.substr(start, pos - start));
    return r;
}

}  // namespace

QuadVal parse_quad(std::string_view text, const LiteralContext& ctx) {
    size_t pos = 0;
    QuadVal value{scan_rat(text, pos)};
    while (pos < text.size()) {
        char op = text[pos];
        if (op != '+' && op != '-') fail(text, pos, "expected '+' or '-'");
        size_t term = pos;
        ++pos;
        Rat coeff = scan_rat(text, pos);
        if (pos >= text.size() || text[pos] != '*') fail(text, pos, "expected '*'");
        ++pos;
        if (pos >= text.size()) fail(text, pos, "expected 'w' or 'L'");
        char sym = text[pos];
        ++pos;
        if (op == '-') coeff = -coeff;
        if (sym == 'w') {
            if (ctx.s.sign() < 0) fail(text, term, "no radicand in scope for 'w'");
            value += QuadVal(Rat(), coeff, ctx.s);
        } else if (sym == 'L') {
            if (!ctx.lambda) fail(text, term, "no lambda in scope for 'L'");
            value += QuadVal(coeff) * *ctx.lambda;
        } else {
            fail(text, pos - 1, "unknown symbol");
        }
    }
    return value;
}

std::pair<QuadVal, QuadVal> parse_direction(std::string_view text, const LiteralContext& ctx) {
    size_t comma = text.find(',');
    if (comma == std::string_view::npos) fail(text, text.size(), "expected ','");
    QuadVal p = parse_quad(text.substr(0, comma), ctx);
    QuadVal q = parse_quad(text.substr(comma + 1), ctx);
    return {p, q};
}

}  // namespace sqtile
