#pragma once

// Text grammar for exact values, shared by the CLI and the JSON schemas.
//
//   Rat      := INT [ "/" POSINT ]
//   QuadVal  := Rat { ("+" | "-") Rat "*" SYM }
//   SYM      := "w"   the square root of the active radicand s
//             | "L"   the active lambda (resolved when a context provides it)
//   Direction:= QuadVal "," QuadVal
//
// Examples with s = 3: "2+1*w" is 2+sqrt(3); "0+1*L,1" is the direction
// (lambda, 1). Formatting always emits the "w" form, so values round-trip.

#include "sqtile/quad.hpp"

#include <optional>
#include <string_view>
#include <utility>

namespace sqtile {

struct LiteralContext {
    Rat s;                         // active radicand
    std::optional<QuadVal> lambda; // enables the "L" symbol when present
};

QuadVal parse_quad(std::string_view text, const LiteralContext& ctx);
std::pair<QuadVal, QuadVal> parse_direction(std::string_view text, const LiteralContext& ctx);

}  // namespace sqtile
