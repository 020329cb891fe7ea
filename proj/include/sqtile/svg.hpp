#pragma once

// Deterministic SVG figures: corner outlines with labeled sides, tiling
// patches with their lattice translates, and dissections colored by
// group. Exact coordinates are projected to floats for display only;
// output is byte-stable (fixed 9-significant-digit formatting, no
// timestamps).

#include "sqtile/corner.hpp"
#include "sqtile/lattice.hpp"
#include "sqtile/regions.hpp"

#include <string>

namespace sqtile {

std::string render_corner_svg(const CornerData& cd, const Direction& dir);
std::string render_tiling_svg(const TilingInstance& t);
std::string render_dissection_svg(const Dissection& d);

}  // namespace sqtile
