#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cftp/error.hpp"
#include "cftp/toggle_system.hpp"

namespace cftp {

enum class ScheduleKind { Uniform, Sweep, RankParity };

std::string_view to_string(ScheduleKind kind);
ScheduleKind parse_schedule_kind(std::string_view text);

/// Maps a time index (and the oracle's site lane) to a randomization site.
/// The choice never looks at coin values.
///
///   uniform      site = floor(site_bits * n / 2^64)
///   sweep        site = order[(-t - 1) mod n], order ascending by default
///   rank-parity  as sweep, with order = all even sites then all odd sites
class Schedule {
public:
    static Schedule uniform(std::size_t site_count);
    static Schedule sweep(std::size_t site_count);
    static Schedule sweep(std::vector<Site> order);

    /// Throws NotGraded when the system has no parity classes.
    template <MonotoneToggleSystem S>
    static Schedule rank_parity(const S& sys) {
        if (!sys.is_graded())
            throw Error(ErrorKind::NotGraded, std::string(sys.name()) + " system has no rank parity classes");
        std::vector<Site> order;
        order.reserve(sys.site_count());
        for (Parity want : {Parity::Even, Parity::Odd})
            for (std::size_t x = 0; x < sys.site_count(); ++x)
                if (sys.parity_of(static_cast<Site>(x)) == want) order.push_back(static_cast<Site>(x));
        Schedule s(ScheduleKind::RankParity, sys.site_count());
        s.order_ = std::move(order);
        return s;
    }

    template <MonotoneToggleSystem S>
    static Schedule make(ScheduleKind kind, const S& sys) {
        switch (kind) {
            case ScheduleKind::Uniform: return uniform(sys.site_count());
            case ScheduleKind::Sweep: return sweep(sys.site_count());
            case ScheduleKind::RankParity: return rank_parity(sys);
        }
        return uniform(sys.site_count());
    }

    ScheduleKind kind() const noexcept { return kind_; }
    std::size_t site_count() const noexcept { return site_count_; }
    std::string descriptor() const { return std::string(to_string(kind_)); }

    Site site_at(std::int64_t t, std::uint64_t site_bits) const noexcept {
        if (kind_ == ScheduleKind::Uniform)
            return static_cast<Site>((static_cast<unsigned __int128>(site_bits) * site_count_) >> 64);
        const auto n = static_cast<std::int64_t>(site_count_);
        const std::int64_t pos = ((-t - 1) % n + n) % n;
        return order_[static_cast<std::size_t>(pos)];
    }

private:
    Schedule(ScheduleKind kind, std::size_t site_count) : kind_(kind), site_count_(site_count) {}

    ScheduleKind kind_;
    std::size_t site_count_;
    std::vector<Site> order_;
};

}  // namespace cftp
