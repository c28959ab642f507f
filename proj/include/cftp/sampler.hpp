#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cftp/error.hpp"
#include "cftp/oracle/enumerate.hpp"
#include "cftp/random.hpp"
#include "cftp/schedule.hpp"
#include "cftp/toggle_system.hpp"

namespace cftp {

/// Up-probability q / (1 + q).  With it every toggle edge satisfies detailed
/// balance for weights proportional to q^rank.  Throws NonPositiveQ.
double biased_coin_threshold(double q);

/// Called with (t, site, coin value) for every time step simulated.
using StepObserver = std::function<void(std::int64_t, Site, double)>;

struct CftpOptions {
    double q = 1.0;
    /// Largest backward horizon tried before HorizonExceeded; unbounded when
    /// empty.
    std::optional<std::uint64_t> horizon_cap;
    StepObserver observer;
};

template <class State>
struct SampleRecord {
    State state;
    std::uint64_t seed = 0;
    std::string algorithm_id;
    std::string schedule;
    double q = 1.0;
    std::uint64_t T_final = 0;
    std::uint64_t update_count = 0;
};

template <class State>
struct CoupledPair {
    State low;
    State high;
};

namespace detail {

inline Coin coin_for(double value, double threshold) noexcept { return value < threshold ? Coin::Up : Coin::Down; }

// Evolves (low, high) over times from_t .. -1.  Equality is checked once per
// site_count steps; after the trajectories meet only one is advanced.
// Returns the number of single-state updates.
template <MonotoneToggleSystem S>
std::uint64_t run_window(const S& sys, CoupledPair<typename S::State>& pair, std::int64_t from_t,
                         const RandomnessOracle& oracle, const Schedule& schedule, double threshold,
                         const StepObserver& observer) {
    std::uint64_t updates = 0;
    bool merged = pair.low == pair.high;
    const auto check_every = static_cast<std::int64_t>(std::max<std::size_t>(sys.site_count(), 1));
    std::int64_t countdown = check_every;
    for (std::int64_t t = from_t; t < 0; ++t) {
        const Draw d = oracle.draw(t);
        const Site x = schedule.site_at(t, d.site_bits);
        if (observer) observer(t, x, d.coin);
        const Coin c = coin_for(d.coin, threshold);
        sys.update(pair.low, x, c);
        ++updates;
        if (merged) continue;
        sys.update(pair.high, x, c);
        ++updates;
        if (--countdown == 0) {
            countdown = check_every;
            merged = pair.low == pair.high;
        }
    }
    if (merged) pair.high = pair.low;
    return updates;
}

}  // namespace detail

/// Runs bottom() and top() jointly from time from_t to 0 with shared sites
/// and coins.  low <= high holds throughout.
template <MonotoneToggleSystem S>
CoupledPair<typename S::State> coupled_run(const S& sys, std::int64_t from_t, const RandomnessOracle& oracle,
                                           const Schedule& schedule, double q = 1.0,
                                           const StepObserver& observer = {}) {
    if (from_t > 0) throw Error(ErrorKind::InvalidArgument, "coupled_run needs from_t <= 0");
    CoupledPair<typename S::State> pair{sys.bottom(), sys.top()};
    if (sys.site_count() == 0) return pair;
    detail::run_window(sys, pair, from_t, oracle, schedule, biased_coin_threshold(q), observer);
    return pair;
}

/// Coupling from the past with backward horizons 0, 1, 2, 4, 8, ...; the
/// step at time t always uses oracle.draw(t), so later iterations replay the
/// randomness of earlier ones.  The returned state is an exact draw from the
/// distribution proportional to q^rank.
template <MonotoneToggleSystem S>
SampleRecord<typename S::State> cftp_sample(const S& sys, const RandomnessOracle& oracle, const Schedule& schedule,
                                            const CftpOptions& options = {}) {
    const double threshold = biased_coin_threshold(options.q);
    SampleRecord<typename S::State> rec;
    rec.seed = oracle.seed();
    rec.algorithm_id = std::string(RandomnessOracle::algorithm_id);
    rec.schedule = schedule.descriptor();
    rec.q = options.q;

    CoupledPair<typename S::State> pair{sys.bottom(), sys.top()};
    if (pair.low == pair.high) {
        rec.state = std::move(pair.low);
        return rec;
    }
    for (std::uint64_t horizon = 1;; horizon *= 2) {
        if (options.horizon_cap && horizon > *options.horizon_cap)
            throw Error(ErrorKind::HorizonExceeded,
                        "no coalescence within horizon " + std::to_string(*options.horizon_cap));
        pair.low = sys.bottom();
        pair.high = sys.top();
        rec.update_count += detail::run_window(sys, pair, -static_cast<std::int64_t>(horizon), oracle, schedule,
                                               threshold, options.observer);
        if (pair.low == pair.high) {
            rec.T_final = horizon;
            rec.state = std::move(pair.low);
            return rec;
        }
        if (horizon > (std::uint64_t{1} << 62))
            throw Error(ErrorKind::HorizonExceeded, "horizon overflow");
    }
}

/// Runs bottom and top FORWARD from time 0 until they meet and returns the
/// meeting state.  This is biased in general; it exists to demonstrate why
/// coupling must go backwards.
template <MonotoneToggleSystem S>
typename S::State forward_coalescence_sample(const S& sys, const RandomnessOracle& oracle, const Schedule& schedule,
                                             double q = 1.0, std::uint64_t* steps = nullptr) {
    const double threshold = biased_coin_threshold(q);
    auto low = sys.bottom(), high = sys.top();
    std::uint64_t t = 0;
    while (!(low == high)) {
        const Draw d = oracle.draw(static_cast<std::int64_t>(t));
        const Site x = schedule.site_at(static_cast<std::int64_t>(t), d.site_bits);
        const Coin c = detail::coin_for(d.coin, threshold);
        sys.update(low, x, c);
        sys.update(high, x, c);
        ++t;
    }
    if (steps) *steps = t;
    return low;
}

/// Either a fixed bias or a request to tune q so the mean rank hits k.
struct AutoQ {};
using RankBias = std::variant<double, AutoQ>;

struct RankSampleOptions {
    RankBias q = AutoQ{};
    std::uint64_t max_tries = 100000;
    /// Systems with at most this many states tune q against the exact rank
    /// distribution; larger ones use a 200-sample pilot per probe.
    std::size_t exact_state_limit = 100000;
    std::size_t pilot_samples = 200;
};

/// Mean of rank under weights q^rank, computed in log space.
double mean_rank_exact(std::span<const BigInt> by_rank, double log_q);

/// Bisection on log q over [-20, 20] (30 iterations) for the q whose mean
/// rank is closest to k.  `mean_at(log_q)` must be non-decreasing.
double tune_log_q(double k, const std::function<double(double)>& mean_at);

template <MonotoneToggleSystem S>
double choose_q_for_rank(const S& sys, std::size_t k, std::uint64_t seed, const Schedule& schedule,
                         const RankSampleOptions& options) {
    std::function<double(double)> mean_at;
    std::optional<EnumerationResult<typename S::State>> exact;
    try {
        exact = enumerate_states(sys, options.exact_state_limit);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::LimitExceeded) throw;
    }
    if (exact) {
        mean_at = [&](double log_q) { return mean_rank_exact(exact->by_rank, log_q); };
    } else {
        mean_at = [&](double log_q) {
            double total = 0;
            for (std::size_t i = 0; i < options.pilot_samples; ++i) {
                const RandomnessOracle oracle(mix_seed(seed ^ mix_seed(0xA5A5A5A5ull + i)));
                total += static_cast<double>(sys.rank_of(cftp_sample(sys, oracle, schedule, {std::exp(log_q)}).state));
            }
            return total / static_cast<double>(options.pilot_samples);
        };
    }
    return std::exp(tune_log_q(static_cast<double>(k), mean_at));
}

/// Rejection sampling on the q-biased chain: returns the first exact draw of
/// rank k, which is uniform on rank k.  Try i uses seed mix_seed(seed + i).
/// Throws MaxTriesExceeded.
template <MonotoneToggleSystem S>
SampleRecord<typename S::State> sample_rank(const S& sys, std::size_t k, std::uint64_t seed, const Schedule& schedule,
                                            const RankSampleOptions& options = {}) {
    const std::size_t max_rank = sys.rank_of(sys.top());
    if (k > max_rank)
        throw Error(ErrorKind::InvalidArgument,
                    "rank " + std::to_string(k) + " exceeds top rank " + std::to_string(max_rank));
    const double q = std::holds_alternative<double>(options.q) ? std::get<double>(options.q)
                                                               : choose_q_for_rank(sys, k, seed, schedule, options);
    for (std::uint64_t i = 0; i < options.max_tries; ++i) {
        const RandomnessOracle oracle(mix_seed(seed + i));
        auto rec = cftp_sample(sys, oracle, schedule, {q});
        if (sys.rank_of(rec.state) == k) return rec;
    }
    throw Error(ErrorKind::MaxTriesExceeded,
                "no rank-" + std::to_string(k) + " draw in " + std::to_string(options.max_tries) +
                    " tries (acceptance rate below " + std::to_string(1.0 / static_cast<double>(options.max_tries)) +
                    ", q = " + std::to_string(q) + ")");
}

struct CoalescenceStats {
    std::size_t trials = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;  // T_final -> trials
    double mean = 0.0;
    double median = 0.0;
    /// (horizon T, fraction of trials coalesced within T), T = 1, 2, 4, ...
    std::vector<std::pair<std::uint64_t, double>> coalesced_within;
    std::uint64_t total_updates = 0;
};

CoalescenceStats summarize_horizons(const std::vector<std::uint64_t>& horizons, std::uint64_t total_updates);

/// Independent CFTP runs with seeds base_seed + i.
template <MonotoneToggleSystem S>
CoalescenceStats coalescence_stats(const S& sys, const Schedule& schedule, std::size_t trials,
                                   std::uint64_t base_seed, double q = 1.0) {
    if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
    std::vector<std::uint64_t> horizons;
    horizons.reserve(trials);
    std::uint64_t updates = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        auto rec = cftp_sample(sys, RandomnessOracle(base_seed + i), schedule, {q});
        horizons.push_back(rec.T_final);
        updates += rec.update_count;
    }
    return summarize_horizons(horizons, updates);
}

/// Applies coins[x] at every site x of the given parity.  Same-parity
/// updates commute, so the result equals any sequential order.  Throws
/// NotGraded.
template <MonotoneToggleSystem S>
typename S::State batch_parity_update(const S& sys, typename S::State state, Parity parity,
                                      std::span<const Coin> coins) {
    if (!sys.is_graded())
        throw Error(ErrorKind::NotGraded, std::string(sys.name()) + " system has no rank parity classes");
    if (coins.size() != sys.site_count())
        throw Error(ErrorKind::InvalidArgument, "need one coin per site");
    for (std::size_t x = 0; x < sys.site_count(); ++x)
        if (sys.parity_of(static_cast<Site>(x)) == parity) sys.update(state, static_cast<Site>(x), coins[x]);
    return state;
}

}  // namespace cftp
