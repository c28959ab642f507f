#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "cftp/bigint.hpp"
#include "cftp/poset.hpp"

namespace cftp {

/// Subset of poset elements as a bit mask.
using ElementMask = std::vector<std::uint64_t>;

/// Exact ideal counting by the deletion recursion
///
///   count(R) = count(R minus up(x)) + count(R minus down(x)),
///
/// memoised on the remaining element set R (the induced subposet), with
/// disconnected R split into a product.  The problem is #P-complete in
/// general, so the memo table is capped; exceeding `budget` entries throws
/// BudgetExceeded.
class IdealCounter {
public:
    explicit IdealCounter(const Poset& p, std::size_t budget = 4'000'000);

    const Poset& poset() const noexcept { return *poset_; }

    ElementMask all() const;
    /// Up-set / down-set of x, both including x.
    const ElementMask& up_set(ElementId x) const { return up_[x]; }
    const ElementMask& down_set(ElementId x) const { return down_[x]; }

    BigInt count(const ElementMask& remaining);
    BigInt count_all() { return count(all()); }

    /// Element of `remaining` with the largest |up| + |down| inside it
    /// (lowest id on ties).
    ElementId pivot(const ElementMask& remaining) const;

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    struct MaskHash {
        std::size_t operator()(const ElementMask& m) const noexcept;
    };

    const Poset* poset_;
    std::size_t budget_;
    std::size_t words_;
    std::vector<ElementMask> up_, down_;
    std::unordered_map<ElementMask, BigInt, MaskHash> memo_;
};

BigInt count_ideals(const Poset& p, std::size_t budget = 4'000'000);

/// Uniform ideals built one decision at a time: the pivot x joins the ideal
/// with probability count(R minus down(x)) / count(R), decided by an exact
/// big-integer draw.
class RecursiveSampler {
public:
    explicit RecursiveSampler(const Poset& p, std::size_t budget = 4'000'000) : counter_(p, budget) {}

    OrderIdeal sample(std::mt19937_64& rng);

    /// Probability that the first decision includes its pivot, as
    /// (favourable, total) ideal counts.
    std::pair<BigInt, BigInt> first_decision_odds();
    ElementId first_pivot() const { return counter_.pivot(counter_.all()); }

private:
    IdealCounter counter_;
};

OrderIdeal recursive_exact_sample(const Poset& p, std::mt19937_64& rng, std::size_t budget = 4'000'000);

/// Uniform integer in [0, n) by rejection on whole 64-bit limbs.
BigInt uniform_below(const BigInt& n, std::mt19937_64& rng);

}  // namespace cftp
