#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cftp/toggle_system.hpp"

namespace cftp {

/// Bipartite graph with an explicit 2-colouring; vertex labels are arbitrary
/// integers.
struct BipartiteGraph {
    std::vector<std::int64_t> black;
    std::vector<std::int64_t> white;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
};

/// Membership flags indexed by the position of each vertex in
/// BipartiteGraph::black / ::white.
struct IndependentSetState {
    std::vector<std::uint8_t> black_members;
    std::vector<std::uint8_t> white_members;

    friend bool operator==(const IndependentSetState&, const IndependentSetState&) = default;
    friend auto operator<=>(const IndependentSetState&, const IndependentSetState&) = default;
};

/// Independent sets ordered by S <= T iff S_black within T_black and
/// S_white containing T_white.  Sites 0..nb-1 are the black vertices, nb..
/// the white ones.  Up at a black vertex adds it if no white neighbour is a
/// member; up at a white vertex removes it.  Down mirrors both.
class IndependentSetSystem {
public:
    using State = IndependentSetState;

    /// Throws NotBipartite if an edge joins two vertices of one colour or a
    /// label is coloured twice; InvalidArgument for unknown labels.
    explicit IndependentSetSystem(BipartiteGraph graph);

    const BipartiteGraph& graph() const noexcept { return graph_; }
    std::size_t black_count() const noexcept { return graph_.black.size(); }
    std::size_t white_count() const noexcept { return graph_.white.size(); }

    std::size_t site_count() const noexcept { return black_count() + white_count(); }
    State bottom() const;
    State top() const;

    bool update(State& s, Site x, Coin coin) const {
        const std::size_t nb = black_count();
        if (x < nb) {
            auto& member = s.black_members[x];
            if (coin == Coin::Down) {
                if (!member) return false;
                member = 0;
                return true;
            }
            if (member) return false;
            for (std::size_t w : black_adj_[x])
                if (s.white_members[w]) return false;
            member = 1;
            return true;
        }
        const std::size_t w = x - nb;
        auto& member = s.white_members[w];
        if (coin == Coin::Up) {
            if (!member) return false;
            member = 0;
            return true;
        }
        if (member) return false;
        for (std::size_t b : white_adj_[w])
            if (s.black_members[b]) return false;
        member = 1;
        return true;
    }

    bool leq(const State& a, const State& b) const noexcept;
    std::size_t rank_of(const State& s) const noexcept;

    std::optional<Parity> parity_of(Site x) const noexcept {
        return x < black_count() ? Parity::Even : Parity::Odd;
    }
    bool is_graded() const noexcept { return true; }
    std::string_view name() const noexcept { return "indep"; }

    /// True iff no edge has both endpoints in the set.
    bool is_independent(const State& s) const;

private:
    BipartiteGraph graph_;
    std::vector<std::vector<std::size_t>> black_adj_;  // white indices
    std::vector<std::vector<std::size_t>> white_adj_;  // black indices
};

inline IndependentSetSystem independent_sets_system(BipartiteGraph g) { return IndependentSetSystem(std::move(g)); }

}  // namespace cftp
