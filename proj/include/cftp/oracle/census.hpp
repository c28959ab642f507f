#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cftp/bigint.hpp"
#include "cftp/error.hpp"
#include "cftp/oracle/enumerate.hpp"
#include "cftp/schedule.hpp"
#include "cftp/toggle_system.hpp"

namespace cftp {

template <class State>
struct CensusResult {
    std::vector<State> states;     // canonical order
    std::vector<Rational> lower;   // P(coalesced within L and output == state)
    std::vector<Rational> upper;   // lower + uncoalesced
    Rational uncoalesced;          // P(no coalescence for any horizon <= L)
    std::size_t horizon = 0;
    BigInt sequences;              // number of equiprobable sequences enumerated
};

/// Exhaustive check of the doubling algorithm with a fair coin (q = 1):
/// every (site, coin) sequence for times -L .. -1 is enumerated, with the
/// site branching n ways under the uniform schedule and fixed by the
/// schedule otherwise.  For each sequence the horizons 0, 1, 2, 4, ... <= L
/// are tried in turn, exactly as the sampler does.  Throws BudgetExceeded
/// when more than `budget` sequences would be needed.
template <MonotoneToggleSystem S>
CensusResult<typename S::State> exact_cftp_census(const S& sys, const Schedule& schedule, std::size_t horizon,
                                                  std::uint64_t budget = std::uint64_t{1} << 24,
                                                  std::size_t state_limit = 64) {
    using State = typename S::State;
    const std::size_t n = sys.site_count();
    const bool uniform = schedule.kind() == ScheduleKind::Uniform;
    const std::uint64_t branching = 2 * (uniform ? std::max<std::size_t>(n, 1) : 1);

    BigInt total = 1;
    for (std::size_t i = 0; i < horizon; ++i) {
        total *= branching;
        if (total > budget)
            throw Error(ErrorKind::BudgetExceeded, "census needs more than " + std::to_string(budget) + " sequences");
    }
    const auto sequences = total.convert_to<std::uint64_t>();

    CensusResult<State> out;
    out.horizon = horizon;
    out.sequences = total;
    out.states = enumerate_states(sys, state_limit).states;
    std::vector<std::uint64_t> hits(out.states.size(), 0);
    std::uint64_t misses = 0;

    std::vector<std::uint64_t> digits(horizon);
    for (std::uint64_t code = 0; code < sequences; ++code) {
        // digits[i] drives time t = -horizon + i
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < horizon; ++i) {
            digits[i] = rest % branching;
            rest /= branching;
        }
        std::optional<State> outcome;
        State low = sys.bottom(), high = sys.top();
        if (low == high) outcome = low;
        for (std::size_t T = 1; !outcome && T <= horizon; T *= 2) {
            low = sys.bottom();
            high = sys.top();
            for (std::size_t i = horizon - T; i < horizon; ++i) {
                const auto t = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(horizon);
                const Coin c = digits[i] % 2 ? Coin::Up : Coin::Down;
                const Site x = uniform ? static_cast<Site>(digits[i] / 2) : schedule.site_at(t, 0);
                sys.update(low, x, c);
                sys.update(high, x, c);
            }
            if (low == high) outcome = low;
        }
        if (!outcome) {
            ++misses;
            continue;
        }
        const auto it = std::lower_bound(out.states.begin(), out.states.end(), *outcome);
        ++hits[static_cast<std::size_t>(it - out.states.begin())];
    }

    out.uncoalesced = Rational(misses, total);
    for (std::size_t i = 0; i < out.states.size(); ++i) {
        out.lower.push_back(Rational(hits[i], total));
        out.upper.push_back(out.lower.back() + out.uncoalesced);
    }
    return out;
}

}  // namespace cftp
