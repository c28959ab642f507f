#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cftp/families/boxes.hpp"
#include "cftp/toggle_system.hpp"

namespace cftp {

/// Box plane partitions updated along filaments: the diagonal chains
/// (i,j,k), (i+1,j+1,k+1), ... of the box poset.  Up adjoins the smallest
/// filament element missing from the ideal, down deletes the largest one
/// present; either is blocked unless the result is still an ideal.  On the
/// lozenge tiling each successful move is a hexagon flip.
///
/// States are stored as height matrices, so an update costs O(log min(a,b,c)).
class FilamentSystem {
public:
    using State = PlanePartition;

    explicit FilamentSystem(const BoxesParams& params);

    const BoxesParams& params() const noexcept { return params_; }

    /// Starting element (min coordinate 0) of filament `x`.
    std::array<int, 3> filament_start(Site x) const { return starts_[x]; }
    int filament_length(Site x) const;

    std::size_t site_count() const noexcept { return starts_.size(); }
    State bottom() const { return PlanePartition(params_.a, params_.b); }
    State top() const;

    bool update(State& s, Site x, Coin c) const {
        const auto [i0, j0, k0] = starts_[x];
        const int len = lengths_[x];
        // Element t of the filament is present iff h(i0+t, j0+t) - t > k0;
        // that quantity strictly decreases in t, so membership is a prefix.
        int lo = 0, hi = len;
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            if (s(i0 + mid, j0 + mid) - mid > k0)
                lo = mid + 1;
            else
                hi = mid;
        }
        const int present = lo;
        if (c == Coin::Up) {
            if (present == len) return false;
            const int i = i0 + present, j = j0 + present, k = k0 + present;
            if (s(i, j) != k) return false;
            if (i > 0 && s(i - 1, j) <= k) return false;
            if (j > 0 && s(i, j - 1) <= k) return false;
            s(i, j) = k + 1;
        } else {
            if (present == 0) return false;
            const int i = i0 + present - 1, j = j0 + present - 1, k = k0 + present - 1;
            if (s(i, j) != k + 1) return false;
            if (i + 1 < params_.a && s(i + 1, j) > k) return false;
            if (j + 1 < params_.b && s(i, j + 1) > k) return false;
            s(i, j) = k;
        }
        return true;
    }

    bool leq(const State& a, const State& b) const noexcept;
    std::size_t rank_of(const State& s) const noexcept { return static_cast<std::size_t>(s.volume()); }

    std::optional<Parity> parity_of(Site) const noexcept { return std::nullopt; }
    bool is_graded() const noexcept { return false; }
    std::string_view name() const noexcept { return "filament"; }

private:
    BoxesParams params_;
    std::vector<std::array<int, 3>> starts_;
    std::vector<int> lengths_;
};

inline FilamentSystem filament_system(const BoxesParams& params) { return FilamentSystem(params); }

}  // namespace cftp
