#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace cftp {

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t degrees = 0;
    double p_value = 1.0;
    bool pass = true;  // p_value >= alpha
};

/// Pearson goodness of fit of observed counts against expected weights (any
/// positive scale; uniform when all equal).  Throws ExpectedCountTooSmall if
/// any expected count is below 5.
ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> counts, std::span<const double> weights,
                                      double alpha);

/// Uniform expected weights.
ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> counts, double alpha);

}  // namespace cftp
