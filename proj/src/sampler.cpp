#include "cftp/sampler.hpp"

#include <cmath>

namespace cftp {

double biased_coin_threshold(double q) {
    if (!(q > 0.0) || !std::isfinite(q))
        throw Error(ErrorKind::NonPositiveQ, "q must be a positive finite number, got " + std::to_string(q));
    return q / (1.0 + q);
}

double mean_rank_exact(std::span<const BigInt> by_rank, double log_q) {
    // log-sum-exp over log(N_r) + r log q
    std::vector<double> logw;
    std::vector<double> rank;
    for (std::size_t r = 0; r < by_rank.size(); ++r) {
        if (by_rank[r] == 0) continue;
        logw.push_back(std::log(by_rank[r].convert_to<double>()) + static_cast<double>(r) * log_q);
        rank.push_back(static_cast<double>(r));
    }
    if (logw.empty()) return 0.0;
    const double peak = *std::max_element(logw.begin(), logw.end());
    double z = 0, m = 0;
    for (std::size_t i = 0; i < logw.size(); ++i) {
        const double w = std::exp(logw[i] - peak);
        z += w;
        m += w * rank[i];
    }
    return m / z;
}

double tune_log_q(double k, const std::function<double(double)>& mean_at) {
    double lo = -20.0, hi = 20.0;
    for (int iter = 0; iter < 30; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mean_at(mid) < k)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CoalescenceStats summarize_horizons(const std::vector<std::uint64_t>& horizons, std::uint64_t total_updates) {
    CoalescenceStats st;
    st.trials = horizons.size();
    st.total_updates = total_updates;
    if (horizons.empty()) return st;
    double sum = 0;
    for (auto h : horizons) {
        ++st.histogram[h];
        sum += static_cast<double>(h);
    }
    st.mean = sum / static_cast<double>(horizons.size());
    std::vector<std::uint64_t> sorted = horizons;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    st.median = n % 2 ? static_cast<double>(sorted[n / 2])
                      : 0.5 * (static_cast<double>(sorted[n / 2 - 1]) + static_cast<double>(sorted[n / 2]));
    const std::uint64_t largest = sorted.back();
    std::size_t done = 0;
    for (std::uint64_t T = 1;; T *= 2) {
        while (done < n && sorted[done] <= T) ++done;
        st.coalesced_within.emplace_back(T, static_cast<double>(done) / static_cast<double>(n));
        if (T >= largest) break;
    }
    return st;
}

}  // namespace cftp
