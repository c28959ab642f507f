#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cftp/bigint.hpp"
#include "cftp/error.hpp"
#include "cftp/oracle/enumerate.hpp"
#include "cftp/toggle_system.hpp"

namespace cftp {

/// Exact law of the state where the forward-coupled (bottom, top) pair first
/// meets, under the uniform site distribution and a fair coin.  Solves the
/// absorption system of the pair chain in rationals.  Returns one entry per
/// state, in canonical order.  Throws BudgetExceeded past `pair_limit`
/// transient pair states.
template <MonotoneToggleSystem S>
std::vector<std::pair<typename S::State, Rational>> forward_bias_exact(const S& sys, std::size_t pair_limit = 400,
                                                                       std::size_t state_limit = 1000) {
    using State = typename S::State;
    using Pair = std::pair<State, State>;
    const auto states = enumerate_states(sys, state_limit).states;
    std::vector<std::pair<State, Rational>> out;
    for (const State& s : states) out.emplace_back(s, Rational(0));
    auto slot = [&](const State& s) {
        return static_cast<std::size_t>(std::lower_bound(states.begin(), states.end(), s) - states.begin());
    };

    const Pair start{sys.bottom(), sys.top()};
    if (start.first == start.second) {
        out[slot(start.first)].second = 1;
        return out;
    }

    // Transient pairs, discovered breadth first.
    std::map<Pair, std::size_t> index{{start, 0}};
    std::vector<Pair> pairs{start};
    const std::size_t n = sys.site_count();
    const Rational step(1, static_cast<long long>(2 * n));
    // rows[i]: transitions from pair i as (target transient | absorbing state, prob)
    std::vector<std::vector<std::pair<std::size_t, Rational>>> to_transient;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> to_absorbing;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        to_transient.emplace_back();
        to_absorbing.emplace_back();
        for (std::size_t x = 0; x < n; ++x)
            for (Coin c : {Coin::Up, Coin::Down}) {
                Pair next = pairs[i];
                sys.update(next.first, static_cast<Site>(x), c);
                sys.update(next.second, static_cast<Site>(x), c);
                if (next.first == next.second) {
                    to_absorbing[i].emplace_back(slot(next.first), step);
                    continue;
                }
                auto [it, fresh] = index.emplace(next, pairs.size());
                if (fresh) {
                    if (pairs.size() >= pair_limit)
                        throw Error(ErrorKind::BudgetExceeded,
                                    "more than " + std::to_string(pair_limit) + " transient pair states");
                    pairs.push_back(next);
                }
                to_transient[i].emplace_back(it->second, step);
            }
    }

    // (I - Q) X = R, Gauss-Jordan elimination in exact arithmetic.
    const std::size_t m = pairs.size(), k = states.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + k, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        a[i][i] += 1;
        for (const auto& [j, p] : to_transient[i]) a[i][j] -= p;
        for (const auto& [s, p] : to_absorbing[i]) a[i][m + s] += p;
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < m + k; ++c) a[r][c] -= f * a[col][c];
        }
    }
    for (std::size_t s = 0; s < k; ++s) out[s].second = a[0][m + s];
    return out;
}

}  // namespace cftp
