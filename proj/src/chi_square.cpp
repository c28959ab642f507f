#include "cftp/oracle/chi_square.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <string>
#include <vector>

#include "cftp/error.hpp"

namespace cftp {

ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> counts, std::span<const double> weights,
                                      double alpha) {
    if (counts.size() != weights.size() || counts.empty())
        throw Error(ErrorKind::InvalidArgument, "counts and weights must be non-empty and of equal length");
    double n = 0, wsum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (!(weights[i] > 0)) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
        n += static_cast<double>(counts[i]);
        wsum += weights[i];
    }
    ChiSquareResult r;
    r.degrees = counts.size() - 1;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double expected = n * weights[i] / wsum;
        if (expected < 5.0)
            throw Error(ErrorKind::ExpectedCountTooSmall,
                        "expected count " + std::to_string(expected) + " in cell " + std::to_string(i));
        const double diff = static_cast<double>(counts[i]) - expected;
        r.statistic += diff * diff / expected;
    }
    if (r.degrees == 0) {
        r.p_value = 1.0;
    } else {
        boost::math::chi_squared dist(static_cast<double>(r.degrees));
        r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    }
    r.pass = r.p_value >= alpha;
    return r;
}

ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> counts, double alpha) {
    const std::vector<double> w(counts.size(), 1.0);
    return chi_square_uniformity(counts, w, alpha);
}

}  // namespace cftp
