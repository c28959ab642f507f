#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "cftp/bigint.hpp"
#include "cftp/error.hpp"
#include "cftp/poset.hpp"
#include "cftp/toggle_system.hpp"

namespace cftp {

template <class State>
struct EnumerationResult {
    std::vector<State> states;     // canonical (ascending) order
    BigInt count;                  // == states.size()
    std::vector<BigInt> by_rank;   // by_rank[r] = number of states of rank r

    /// Index of s in `states`, or states.size() if absent.
    std::size_t index_of(const State& s) const {
        auto it = std::lower_bound(states.begin(), states.end(), s);
        return it != states.end() && *it == s ? static_cast<std::size_t>(it - states.begin()) : states.size();
    }
};

/// All ideals of p by depth-first include/exclude decisions along a linear
/// extension.  Throws LimitExceeded once more than `limit` ideals are found.
EnumerationResult<OrderIdeal> enumerate_ideals(const Poset& p, std::size_t limit);

/// All states reachable from bottom() by single toggles, for any monotone
/// system.  Throws LimitExceeded past `limit` states.
template <MonotoneToggleSystem S>
EnumerationResult<typename S::State> enumerate_states(const S& sys, std::size_t limit) {
    using State = typename S::State;
    std::set<State> seen{sys.bottom()};
    std::vector<State> frontier{sys.bottom()};
    while (!frontier.empty()) {
        State s = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t x = 0; x < sys.site_count(); ++x)
            for (Coin c : {Coin::Up, Coin::Down}) {
                State t = s;
                if (!sys.update(t, static_cast<Site>(x), c)) continue;
                if (seen.insert(t).second) {
                    if (seen.size() > limit)
                        throw Error(ErrorKind::LimitExceeded, "more than " + std::to_string(limit) + " states");
                    frontier.push_back(std::move(t));
                }
            }
    }
    EnumerationResult<State> out;
    out.states.assign(seen.begin(), seen.end());
    out.count = out.states.size();
    for (const State& s : out.states) {
        const std::size_t r = sys.rank_of(s);
        if (out.by_rank.size() <= r) out.by_rank.resize(r + 1, 0);
        ++out.by_rank[r];
    }
    return out;
}

}  // namespace cftp
