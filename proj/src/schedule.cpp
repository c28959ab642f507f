#include "cftp/schedule.hpp"

#include <numeric>

namespace cftp {

std::string_view to_string(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::Uniform: return "uniform";
        case ScheduleKind::Sweep: return "sweep";
        case ScheduleKind::RankParity: return "rank-parity";
    }
    return "uniform";
}

ScheduleKind parse_schedule_kind(std::string_view text) {
    if (text == "uniform") return ScheduleKind::Uniform;
    if (text == "sweep") return ScheduleKind::Sweep;
    if (text == "rank-parity") return ScheduleKind::RankParity;
    throw Error(ErrorKind::InvalidArgument, "unknown schedule '" + std::string(text) + "'");
}

Schedule Schedule::uniform(std::size_t site_count) { return Schedule(ScheduleKind::Uniform, site_count); }

Schedule Schedule::sweep(std::size_t site_count) {
    std::vector<Site> order(site_count);
    std::iota(order.begin(), order.end(), Site{0});
    return sweep(std::move(order));
}

Schedule Schedule::sweep(std::vector<Site> order) {
    Schedule s(ScheduleKind::Sweep, order.size());
    s.order_ = std::move(order);
    return s;
}

}  // namespace cftp
