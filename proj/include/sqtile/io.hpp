#pragma once

// JSON schemas for tiling instances, dissections and sweep reports.
// Every number is carried as an exact literal string (module literal
// grammar), so files are human-writable and round-trip byte-identically
// through serialize(parse(...)) for canonical files.
//
//   TilingInstance = {"s", "lambda", "mode": "plane"|"wrap",
//                     "direction": {"p", "q"},
//                     "squares": [{"x", "y", "side"}]}      (frame coords)
//   Dissection     = {"region": {"kind": "corner", "a","b","c","d"}
//                             | {"kind": "rect", "w","h"},
//                     "pieces": [{"x","y","w","h"}],
//                     "groups": [{"side", "members":
//                                  [{"piece","x","y","transposed"}]}]}
//
// Dissection files carry no radicand of their own; the caller supplies
// the active LiteralContext (CLI: --s/--lambda).

#include "sqtile/classify.hpp"
#include "sqtile/lattice.hpp"
#include "sqtile/literal.hpp"
#include "sqtile/regions.hpp"

#include <string>

namespace sqtile {

std::string serialize_tiling(const TilingInstance& t);
TilingInstance parse_tiling(const std::string& json_text);

std::string serialize_dissection(const Dissection& d);
Dissection parse_dissection(const std::string& json_text, const LiteralContext& ctx);

std::string serialize_sweep(const SweepReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sqtile
