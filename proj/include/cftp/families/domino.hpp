#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cftp/toggle_system.hpp"

namespace cftp {

/// Unit square [x, x+1] x [y, y+1]; black iff x + y is even.
struct Cell {
    int x = 0;
    int y = 0;

    bool black() const noexcept { return ((x + y) & 1) == 0; }
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Two edge-adjacent cells, stored with first < second.
struct Domino {
    Cell first;
    Cell second;

    friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// Height per region vertex (indexed as DominoSystem::vertices()).
struct DominoHeight {
    std::vector<int> h;

    friend bool operator==(const DominoHeight&, const DominoHeight&) = default;
    friend auto operator<=>(const DominoHeight& a, const DominoHeight& b) { return a.h <=> b.h; }
};

/// Domino tilings of a simply connected region as height functions.
///
/// Convention: walking along a unit edge with a black cell on the left raises
/// the height by 1 when the edge lies on a domino boundary and lowers it by 3
/// when a domino straddles the edge.  Boundary edges never straddle a domino,
/// so boundary heights are fixed (the lexicographically smallest boundary
/// vertex has height 0).  Sites are the interior vertices; up adds 4 at a
/// vertex that is a local minimum against all four neighbours (a 2x2 block
/// rotation), down subtracts 4 at a local maximum.
class DominoSystem {
public:
    using State = DominoHeight;

    /// Throws NotSimplyConnected (disconnected, holed or pinched region) or
    /// NotTileable.
    explicit DominoSystem(std::vector<Cell> region);

    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const std::vector<std::array<int, 2>>& vertices() const noexcept { return vertices_; }
    std::size_t site_vertex(Site x) const { return sites_[x].vertex; }

    std::size_t site_count() const noexcept { return sites_.size(); }
    State bottom() const { return bottom_; }
    State top() const { return top_; }

    bool update(State& s, Site x, Coin coin) const {
        const SiteInfo& site = sites_[x];
        const int hv = s.h[site.vertex];
        const int shift = coin == Coin::Up ? 0 : 4;
        for (const auto& [u, lo] : site.neighbours)
            if (hv - s.h[u] != lo + shift) return false;
        s.h[site.vertex] = coin == Coin::Up ? hv + 4 : hv - 4;
        return true;
    }

    bool leq(const State& a, const State& b) const noexcept;
    std::size_t rank_of(const State& s) const noexcept;

    std::optional<Parity> parity_of(Site x) const noexcept {
        const auto& p = vertices_[sites_[x].vertex];
        return ((p[0] + p[1]) & 1) == 0 ? Parity::Even : Parity::Odd;
    }
    bool is_graded() const noexcept { return true; }
    std::string_view name() const noexcept { return "domino"; }

    /// True iff s has the boundary values and every interior edge difference
    /// is legal.
    bool is_valid(const State& s) const;

    /// Dominoes in sorted order.
    std::vector<Domino> tiling(const State& s) const;
    /// Throws InvalidArgument if the dominoes do not tile the region.
    State heights_from_tiling(std::span<const Domino> dominoes) const;

private:
    struct Edge {
        std::size_t from, to;  // east or north
        int step;              // +1 if the cell left of from->to is black, else -1
        bool interior;
        Cell left, right;
    };
    struct SiteInfo {
        std::size_t vertex;
        // Neighbour vertex and the smaller of the two legal values of
        // h(vertex) - h(neighbour).
        std::array<std::pair<std::size_t, int>, 4> neighbours;
    };

    std::vector<Cell> cells_;
    std::vector<std::array<int, 2>> vertices_;
    std::vector<Edge> edges_;
    std::vector<SiteInfo> sites_;
    State bottom_, top_;
};

inline DominoSystem domino_system(std::vector<Cell> region) { return DominoSystem(std::move(region)); }

/// Cells of the w x h rectangle with lower-left cell (0, 0).
std::vector<Cell> rectangle_region(int width, int height);

}  // namespace cftp
