#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cftp {

/// Index of a randomization site: a poset element, filament, matrix cell or
/// vertex, depending on the system.
using Site = std::uint32_t;

enum class Coin : std::uint8_t { Down, Up };

enum class Parity : std::uint8_t { Even, Odd };

/// A finite distributive lattice presented through coin-driven single-site
/// updates.  Implementations must satisfy, for all states s <= t, sites x and
/// coins c:
///
///   update(s, x, c) <= update(t, x, c)          (monotone)
///   bottom() <= s <= top()                      (for every reachable s)
///   rank_of(bottom()) == 0, successful toggles change rank_of by exactly 1
///
/// `update` mutates in place and reports whether the state changed; the pure
/// form is `apply_update`.  Systems whose sites split into two classes with
/// pairwise commuting updates report them via `parity_of`.
template <class S>
concept MonotoneToggleSystem =
    std::copyable<typename S::State> && std::equality_comparable<typename S::State> &&
    requires(const S& sys, typename S::State& s, const typename S::State& cs, Site x, Coin c) {
        { sys.site_count() } -> std::convertible_to<std::size_t>;
        { sys.bottom() } -> std::convertible_to<typename S::State>;
        { sys.top() } -> std::convertible_to<typename S::State>;
        { sys.update(s, x, c) } -> std::same_as<bool>;
        { sys.leq(cs, cs) } -> std::same_as<bool>;
        { sys.rank_of(cs) } -> std::convertible_to<std::size_t>;
        { sys.parity_of(x) } -> std::same_as<std::optional<Parity>>;
        { sys.is_graded() } -> std::same_as<bool>;
        { sys.name() } -> std::convertible_to<std::string_view>;
    };

template <MonotoneToggleSystem S>
typename S::State apply_update(const S& sys, typename S::State s, Site x, Coin c) {
    sys.update(s, x, c);
    return s;
}

}  // namespace cftp
