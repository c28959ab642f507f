#pragma once

#include <string>

#include "cftp/families/asm.hpp"
#include "cftp/families/boxes.hpp"
#include "cftp/families/domino.hpp"
#include "cftp/families/independent_sets.hpp"

namespace cftp {

/// Digit rows; space-separated entries when a part exceeds 9.
std::string render_ascii(const PlanePartition& pp);

/// '+', '0', '-' per entry, one row per line.
std::string render_ascii(const SignMatrix& m);

/// "black: ..." and "white: ..." lines listing member labels.
std::string render_ascii(const IndependentSetSystem& sys, const IndependentSetState& s);

/// Cell grid, top row first: '-' horizontal domino, '|' vertical, '.' outside
/// the region.  Throws UnsupportedFamily when the bounding box exceeds
/// kMaxDominoAsciiSide on either axis.
std::string render_ascii(const DominoSystem& sys, const DominoHeight& s);

inline constexpr int kMaxDominoAsciiSide = 80;

}  // namespace cftp
