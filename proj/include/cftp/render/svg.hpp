#pragma once

#include <array>
#include <span>
#include <string>

#include "cftp/families/boxes.hpp"
#include "cftp/families/domino.hpp"

namespace cftp {

enum class RenderFormat { Svg, Ascii, Json };

/// `palette` is indexed by LozengeOrientation (X, Y, Z); domino renders use
/// entry 0 for horizontal and entry 1 for vertical dominoes.
struct RenderSpec {
    RenderFormat format = RenderFormat::Svg;
    double scale = 12.0;
    std::array<std::string, 3> palette{"#f4d35e", "#ee964b", "#0d3b66"};
    std::string stroke = "#222222";

    /// Throws InvalidArgument unless scale > 0 and every palette entry is set.
    void validate() const;
};

/// One <polygon> per rhombus plus the hexagon outline.  Output bytes depend
/// only on the inputs.
std::string render_lozenge_svg(const PlanePartition& pp, const BoxesParams& params, const RenderSpec& spec);

std::string render_domino_svg(std::span<const Domino> tiling, std::span<const Cell> region, const RenderSpec& spec);

}  // namespace cftp
