#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "cftp/error.hpp"
#include "cftp/oracle/chi_square.hpp"
#include "cftp/oracle/enumerate.hpp"
#include "cftp/sampler.hpp"

namespace cftp {

template <class State>
struct TallyReport {
    std::vector<State> states;  // canonical order
    std::vector<std::uint64_t> counts;
    std::vector<double> probabilities;  // oracle target law, q^rank normalised
    std::uint64_t samples = 0;
    std::uint64_t off_support = 0;  // draws that are not states at all
    ChiSquareResult chi;
    double total_variation = 0.0;
};

/// Target weights q^rank / sum q^rank over the enumerated states.
template <MonotoneToggleSystem S>
std::vector<double> rank_weights(const S& sys, const std::vector<typename S::State>& states, double q) {
    std::vector<double> logs;
    double top = -INFINITY;
    for (const auto& s : states) {
        logs.push_back(static_cast<double>(sys.rank_of(s)) * std::log(q));
        top = std::max(top, logs.back());
    }
    double z = 0;
    for (double& l : logs) z += (l = std::exp(l - top));
    for (double& l : logs) l /= z;
    return logs;
}

/// Draws `samples` states with draw(i) and tests them against the q^rank law
/// on the oracle-enumerated state space.
template <MonotoneToggleSystem S>
TallyReport<typename S::State> tally_against_oracle(const S& sys, std::uint64_t samples,
                                                    const std::function<typename S::State(std::uint64_t)>& draw,
                                                    double q, double alpha, std::size_t state_limit = 100000) {
    TallyReport<typename S::State> r;
    const auto e = enumerate_states(sys, state_limit);
    r.states = e.states;
    r.counts.assign(r.states.size(), 0);
    r.probabilities = rank_weights(sys, r.states, q);
    r.samples = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const std::size_t k = e.index_of(draw(i));
        if (k == r.states.size())
            ++r.off_support;
        else
            ++r.counts[k];
    }
    r.chi = chi_square_uniformity(r.counts, r.probabilities, alpha);
    if (r.off_support) r.chi.pass = false;
    for (std::size_t k = 0; k < r.states.size(); ++k)
        r.total_variation +=
            std::abs(static_cast<double>(r.counts[k]) / static_cast<double>(samples) - r.probabilities[k]);
    r.total_variation /= 2;
    return r;
}

/// CFTP draws with seeds base_seed + i.
template <MonotoneToggleSystem S>
TallyReport<typename S::State> cftp_uniformity(const S& sys, const Schedule& schedule, std::uint64_t samples,
                                               std::uint64_t base_seed, double q, double alpha) {
    CftpOptions opt;
    opt.q = q;
    return tally_against_oracle<S>(
        sys, samples,
        [&](std::uint64_t i) { return cftp_sample(sys, RandomnessOracle(base_seed + i), schedule, opt).state; }, q,
        alpha);
}

/// Forward-coupled meeting states with seeds base_seed + i (biased in general).
template <MonotoneToggleSystem S>
TallyReport<typename S::State> forward_uniformity(const S& sys, const Schedule& schedule, std::uint64_t samples,
                                                  std::uint64_t base_seed, double alpha) {
    return tally_against_oracle<S>(
        sys, samples,
        [&](std::uint64_t i) { return forward_coalescence_sample(sys, RandomnessOracle(base_seed + i), schedule); },
        1.0, alpha);
}

/// Largest |observed - expected| in units of the multinomial standard
/// deviation sqrt(N p (1 - p)).
inline double max_sigma_deviation(const std::vector<std::uint64_t>& counts, const std::vector<double>& p,
                                  std::uint64_t samples) {
    double worst = 0;
    const auto n = static_cast<double>(samples);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const double sd = std::sqrt(n * p[k] * (1 - p[k]));
        const double dev = std::abs(static_cast<double>(counts[k]) - n * p[k]);
        worst = std::max(worst, sd > 0 ? dev / sd : (dev > 0 ? INFINITY : 0.0));
    }
    return worst;
}

}  // namespace cftp
