#include "cftp/families/independent_sets.hpp"

#include <string>
#include <unordered_map>

#include "cftp/error.hpp"

namespace cftp {

IndependentSetSystem::IndependentSetSystem(BipartiteGraph graph) : graph_(std::move(graph)) {
    // colour: 0 black, 1 white; value is the index within its colour list.
    std::unordered_map<std::int64_t, std::pair<int, std::size_t>> where;
    for (std::size_t i = 0; i < graph_.black.size(); ++i)
        if (!where.emplace(graph_.black[i], std::pair{0, i}).second)
            throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(graph_.black[i]) + " listed twice");
    for (std::size_t i = 0; i < graph_.white.size(); ++i)
        if (auto [it, fresh] = where.emplace(graph_.white[i], std::pair{1, i}); !fresh)
            throw Error(it->second.first == 0 ? ErrorKind::NotBipartite : ErrorKind::InvalidArgument,
                        "vertex " + std::to_string(graph_.white[i]) + " coloured twice");

    black_adj_.assign(graph_.black.size(), {});
    white_adj_.assign(graph_.white.size(), {});
    for (const auto& [u, v] : graph_.edges) {
        auto iu = where.find(u), iv = where.find(v);
        if (iu == where.end() || iv == where.end())
            throw Error(ErrorKind::InvalidArgument,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") names an unknown vertex");
        if (iu->second.first == iv->second.first)
            throw Error(ErrorKind::NotBipartite,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins two vertices of one colour");
        const std::size_t b = iu->second.first == 0 ? iu->second.second : iv->second.second;
        const std::size_t w = iu->second.first == 1 ? iu->second.second : iv->second.second;
        black_adj_[b].push_back(w);
        white_adj_[w].push_back(b);
    }
}

IndependentSetState IndependentSetSystem::bottom() const {
    return {std::vector<std::uint8_t>(black_count(), 0), std::vector<std::uint8_t>(white_count(), 1)};
}

IndependentSetState IndependentSetSystem::top() const {
    return {std::vector<std::uint8_t>(black_count(), 1), std::vector<std::uint8_t>(white_count(), 0)};
}

bool IndependentSetSystem::leq(const State& a, const State& b) const noexcept {
    for (std::size_t i = 0; i < a.black_members.size(); ++i)
        if (a.black_members[i] && !b.black_members[i]) return false;
    for (std::size_t i = 0; i < a.white_members.size(); ++i)
        if (b.white_members[i] && !a.white_members[i]) return false;
    return true;
}

std::size_t IndependentSetSystem::rank_of(const State& s) const noexcept {
    std::size_t r = white_count();
    for (auto m : s.black_members) r += m;
    for (auto m : s.white_members) r -= m;
    return r;
}

bool IndependentSetSystem::is_independent(const State& s) const {
    for (std::size_t b = 0; b < black_adj_.size(); ++b) {
        if (!s.black_members[b]) continue;
        for (std::size_t w : black_adj_[b])
            if (s.white_members[w]) return false;
    }
    return true;
}

}  // namespace cftp
