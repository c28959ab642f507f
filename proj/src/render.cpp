#include "cftp/render/ascii.hpp"
#include "cftp/render/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>

#include "cftp/error.hpp"

namespace cftp {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

void RenderSpec::validate() const {
    if (!(scale > 0)) throw Error(ErrorKind::InvalidArgument, "render scale must be positive");
    for (const auto& p : palette)
        if (p.empty()) throw Error(ErrorKind::InvalidArgument, "palette needs three fill styles");
}

std::string render_lozenge_svg(const PlanePartition& pp, const BoxesParams& params, const RenderSpec& spec) {
    spec.validate();
    const auto lozenges = plane_partition_to_lozenges(pp, params);
    const auto hex = hexagon_corners(params);

    double minx = std::numeric_limits<double>::max(), maxx = -minx, miny = minx, maxy = -minx;
    for (const auto& c : hex) {
        const Point2 q = project(c);
        minx = std::min(minx, q.x);
        maxx = std::max(maxx, q.x);
        miny = std::min(miny, q.y);
        maxy = std::max(maxy, q.y);
    }
    const double margin = 1.0;
    const double width = (maxx - minx + 2 * margin) * spec.scale;
    const double height = (maxy - miny + 2 * margin) * spec.scale;
    auto px = [&](const Point2& q) {
        return fmt((q.x - minx + margin) * spec.scale) + "," + fmt((maxy - q.y + margin) * spec.scale);
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    out += "<desc>lozenge tiling of the (" + std::to_string(params.a) + "," + std::to_string(params.b) + "," +
           std::to_string(params.c) + ") hexagon</desc>\n";
    out += "<g stroke=\"" + spec.stroke + "\" stroke-width=\"" + fmt(spec.scale / 20.0) +
           "\" stroke-linejoin=\"round\">\n";
    static constexpr const char* kClass[3] = {"X", "Y", "Z"};
    for (const Lozenge& l : lozenges) {
        const auto o = static_cast<std::size_t>(l.orientation);
        out += "<polygon class=\"" + std::string(kClass[o]) + "\" fill=\"" + spec.palette[o] + "\" points=\"";
        const auto v = lozenge_vertices(l);
        for (std::size_t i = 0; i < 4; ++i) {
            if (i) out += ' ';
            out += px(project(v[i]));
        }
        out += "\"/>\n";
    }
    out += "</g>\n<polygon class=\"outline\" fill=\"none\" stroke=\"" + spec.stroke + "\" stroke-width=\"" +
           fmt(spec.scale / 8.0) + "\" points=\"";
    for (std::size_t i = 0; i < hex.size(); ++i) {
        if (i) out += ' ';
        out += px(project(hex[i]));
    }
    out += "\"/>\n</svg>\n";
    return out;
}

std::string render_domino_svg(std::span<const Domino> tiling, std::span<const Cell> region, const RenderSpec& spec) {
    spec.validate();
    if (region.empty()) throw Error(ErrorKind::InvalidArgument, "empty region");
    int minx = region[0].x, maxx = minx, miny = region[0].y, maxy = miny;
    for (const Cell& c : region) {
        minx = std::min(minx, c.x);
        maxx = std::max(maxx, c.x);
        miny = std::min(miny, c.y);
        maxy = std::max(maxy, c.y);
    }
    const double s = spec.scale;
    const double width = (maxx - minx + 3) * s, height = (maxy - miny + 3) * s;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    out += "<g stroke=\"" + spec.stroke + "\" stroke-width=\"" + fmt(s / 20.0) + "\">\n";
    for (const Domino& d : tiling) {
        const bool horizontal = d.first.y == d.second.y;
        const int x0 = std::min(d.first.x, d.second.x), y1 = std::max(d.first.y, d.second.y);
        const double w = horizontal ? 2 : 1, h = horizontal ? 1 : 2;
        out += "<rect class=\"" + std::string(horizontal ? "H" : "V") + "\" fill=\"" +
               spec.palette[horizontal ? 0 : 1] + "\" x=\"" + fmt((x0 - minx + 1) * s) + "\" y=\"" +
               fmt((maxy - y1 + 1) * s) + "\" width=\"" + fmt(w * s) + "\" height=\"" + fmt(h * s) + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_ascii(const PlanePartition& pp) {
    const bool wide = std::any_of(pp.parts.begin(), pp.parts.end(), [](int v) { return v > 9; });
    std::string out;
    for (int i = 0; i < pp.rows; ++i) {
        if (i) out += '\n';
        for (int j = 0; j < pp.cols; ++j) {
            if (wide && j) out += ' ';
            out += std::to_string(pp(i, j));
        }
    }
    return out;
}

std::string render_ascii(const SignMatrix& m) {
    std::string out;
    for (int i = 0; i < m.n; ++i) {
        if (i) out += '\n';
        for (int j = 0; j < m.n; ++j) out += m(i, j) > 0 ? '+' : m(i, j) < 0 ? '-' : '0';
    }
    return out;
}

std::string render_ascii(const IndependentSetSystem& sys, const IndependentSetState& s) {
    std::string out = "black:";
    for (std::size_t i = 0; i < s.black_members.size(); ++i)
        if (s.black_members[i]) out += " " + std::to_string(sys.graph().black[i]);
    out += "\nwhite:";
    for (std::size_t i = 0; i < s.white_members.size(); ++i)
        if (s.white_members[i]) out += " " + std::to_string(sys.graph().white[i]);
    return out;
}

std::string render_ascii(const DominoSystem& sys, const DominoHeight& s) {
    const auto& cells = sys.cells();
    int minx = cells[0].x, maxx = minx, miny = cells[0].y, maxy = miny;
    for (const Cell& c : cells) {
        minx = std::min(minx, c.x);
        maxx = std::max(maxx, c.x);
        miny = std::min(miny, c.y);
        maxy = std::max(maxy, c.y);
    }
    if (maxx - minx + 1 > kMaxDominoAsciiSide || maxy - miny + 1 > kMaxDominoAsciiSide)
        throw Error(ErrorKind::UnsupportedFamily, "domino region too large for ASCII rendering");
    std::map<Cell, char> glyph;
    for (const Domino& d : sys.tiling(s)) {
        const char g = d.first.y == d.second.y ? '-' : '|';
        glyph[d.first] = g;
        glyph[d.second] = g;
    }
    std::string out;
    for (int y = maxy; y >= miny; --y) {
        if (y != maxy) out += '\n';
        for (int x = minx; x <= maxx; ++x) {
            auto it = glyph.find({x, y});
            out += it == glyph.end() ? '.' : it->second;
        }
    }
    return out;
}

}  // namespace cftp
