#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "cftp/poset.hpp"
#include "cftp/toggle_system.hpp"

namespace cftp {

/// Order ideals of a poset under single-element toggles, ordered by inclusion.
class IdealSystem {
public:
    using State = OrderIdeal;

    explicit IdealSystem(Poset p) : poset_(std::move(p)) {}

    const Poset& poset() const noexcept { return poset_; }

    std::size_t site_count() const noexcept { return poset_.size(); }
    State bottom() const { return bottom_ideal(poset_); }
    State top() const { return top_ideal(poset_); }

    bool update(State& s, Site x, Coin c) const { return try_move(poset_, s, x, c); }
    bool leq(const State& a, const State& b) const { return a.is_subset_of(b); }
    std::size_t rank_of(const State& s) const noexcept { return s.size(); }

    std::optional<Parity> parity_of(Site x) const {
        if (!poset_.is_graded()) return std::nullopt;
        return poset_.depth(x) % 2 == 0 ? Parity::Even : Parity::Odd;
    }
    bool is_graded() const noexcept { return poset_.is_graded(); }
    std::string_view name() const noexcept { return "ideal"; }

private:
    Poset poset_;
};

inline IdealSystem ideal_system(Poset p) { return IdealSystem(std::move(p)); }

}  // namespace cftp
