#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace cftp {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as
/// easy as 1, 2, 3").
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

struct Draw {
    std::uint64_t site_bits = 0;  // resolved to a site by the schedule
    double coin = 0.0;            // uniform on [0, 1)
};

/// Stateless map (seed, time index) -> Draw.  The seed is the Philox key and
/// the time index (two's complement) the counter, so any time step can be
/// regenerated in O(1) without storing history.  The site lane uses output
/// words 0-1 and the coin lane words 2-3 of the same block.
class RandomnessOracle {
public:
    static constexpr std::string_view algorithm_id = "philox4x32-10;ctr=t;site=w0w1;coin=w2w3>>11";

    explicit RandomnessOracle(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    Draw draw(std::int64_t t) const noexcept {
        const auto ut = static_cast<std::uint64_t>(t);
        const auto w = philox4x32_10({static_cast<std::uint32_t>(ut), static_cast<std::uint32_t>(ut >> 32), 0, 0},
                                     {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
        Draw d;
        d.site_bits = (std::uint64_t{w[0]} << 32) | w[1];
        const std::uint64_t coin_bits = (std::uint64_t{w[2]} << 32) | w[3];
        d.coin = static_cast<double>(coin_bits >> 11) * 0x1.0p-53;
        return d;
    }

private:
    std::uint64_t seed_;
};

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace cftp
