#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cftp/toggle_system.hpp"

namespace cftp {

using ElementId = std::uint32_t;

struct Cover {
    ElementId lower = 0;
    ElementId upper = 0;

    friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Finite poset on dense ids 0..m-1, stored as its Hasse diagram.
///
/// Construction rejects cyclic input and covers implied by transitivity, so
/// the per-element cover lists are exactly the Hasse neighbours.  Each element
/// also carries its depth (length of the longest chain below it); the poset is
/// graded when every cover raises depth by exactly one.
class Poset {
public:
    Poset() = default;

    std::size_t size() const noexcept { return depth_.size(); }
    bool empty() const noexcept { return depth_.empty(); }

    /// Covers in lexicographic (lower, upper) order.
    const std::vector<Cover>& covers() const noexcept { return covers_; }

    std::span<const ElementId> lower_covers(ElementId x) const {
        return {lower_.data() + lower_offset_[x], lower_.data() + lower_offset_[x + 1]};
    }
    std::span<const ElementId> upper_covers(ElementId x) const {
        return {upper_.data() + upper_offset_[x], upper_.data() + upper_offset_[x + 1]};
    }

    std::uint32_t depth(ElementId x) const { return depth_[x]; }
    bool is_graded() const noexcept { return graded_; }

    /// Element ids sorted so that every element follows all its lower covers.
    const std::vector<ElementId>& linear_extension() const noexcept { return linear_extension_; }

    /// x <= y in the partial order.
    bool leq(ElementId x, ElementId y) const;

    friend Poset build_poset(std::size_t elements, std::vector<Cover> covers);

private:
    std::vector<Cover> covers_;
    std::vector<std::size_t> lower_offset_, upper_offset_;
    std::vector<ElementId> lower_, upper_;
    std::vector<std::uint32_t> depth_;
    std::vector<ElementId> linear_extension_;
    bool graded_ = true;
};

/// Validates and builds a poset.  Throws Error with kind IdentifierOutOfRange,
/// CycleDetected or RedundantCover (duplicates count as redundant).
Poset build_poset(std::size_t elements, std::vector<Cover> covers);

/// Fixed-capacity membership vector with cached cardinality.
class OrderIdeal {
public:
    OrderIdeal() = default;
    explicit OrderIdeal(std::size_t capacity) : bits_(capacity, 0) {}

    std::size_t capacity() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return size_; }
    bool contains(ElementId x) const { return bits_[x] != 0; }

    void insert(ElementId x) {
        if (!bits_[x]) {
            bits_[x] = 1;
            ++size_;
        }
    }
    void erase(ElementId x) {
        if (bits_[x]) {
            bits_[x] = 0;
            --size_;
        }
    }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::vector<ElementId> members() const;

    bool is_subset_of(const OrderIdeal& other) const;

    friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) { return a.bits_ == b.bits_; }
    /// Lexicographic on the membership vector.
    friend std::strong_ordering operator<=>(const OrderIdeal& a, const OrderIdeal& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t size_ = 0;
};

bool is_order_ideal(const Poset& p, std::span<const ElementId> subset);
bool is_order_ideal(const Poset& p, const OrderIdeal& ideal);

/// Builds an ideal from a member list; throws InvalidArgument if the list is
/// not downward closed.
OrderIdeal make_ideal(const Poset& p, std::span<const ElementId> members);

OrderIdeal bottom_ideal(const Poset& p);
OrderIdeal top_ideal(const Poset& p);

inline std::size_t rank(const OrderIdeal& ideal) noexcept { return ideal.size(); }

/// In-place single-site move; returns true if membership of x changed.
inline bool try_move(const Poset& p, OrderIdeal& ideal, ElementId x, Coin coin) {
    if (coin == Coin::Up) {
        if (ideal.contains(x)) return false;
        for (ElementId y : p.lower_covers(x))
            if (!ideal.contains(y)) return false;
        ideal.insert(x);
    } else {
        if (!ideal.contains(x)) return false;
        for (ElementId y : p.upper_covers(x))
            if (ideal.contains(y)) return false;
        ideal.erase(x);
    }
    return true;
}

/// Up adds x when all its lower covers are present, down removes x when none
/// of its upper covers is present; blocked moves leave the ideal unchanged.
inline OrderIdeal apply_move(const Poset& p, OrderIdeal ideal, ElementId x, Coin coin) {
    try_move(p, ideal, x, coin);
    return ideal;
}

}  // namespace cftp
