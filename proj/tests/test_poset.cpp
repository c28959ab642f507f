#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "cftp/error.hpp"
#include "cftp/poset.hpp"

using namespace cftp;
using cftp::test::all_small_posets;
using cftp::test::chain;

namespace {

ErrorKind kind_of(std::size_t n, std::vector<Cover> covers) {
    try {
        build_poset(n, std::move(covers));
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

std::vector<OrderIdeal> all_ideals_by_subsets(const Poset& p) {
    std::vector<OrderIdeal> out;
    for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
        OrderIdeal s(p.size());
        for (ElementId x = 0; x < p.size(); ++x)
            if (mask >> x & 1) s.insert(x);
        if (is_order_ideal(p, s)) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("build_poset examples") {
    const Poset a = build_poset(2, {});
    CHECK(a.size() == 2);
    CHECK(a.covers().empty());
    CHECK_FALSE(a.leq(0, 1));
    CHECK_FALSE(a.leq(1, 0));

    const Poset c = build_poset(2, {{0, 1}});
    CHECK(c.leq(0, 1));
    CHECK_FALSE(c.leq(1, 0));
    CHECK(c.upper_covers(0).size() == 1);
    CHECK(c.lower_covers(1)[0] == 0);

    CHECK(kind_of(2, {{0, 1}, {1, 0}}) == ErrorKind::CycleDetected);
}

TEST_CASE("build_poset rejects malformed input") {
    CHECK(kind_of(2, {{0, 2}}) == ErrorKind::IdentifierOutOfRange);
    CHECK(kind_of(1, {{0, 0}}) == ErrorKind::CycleDetected);
    CHECK(kind_of(3, {{0, 1}, {1, 2}, {2, 0}}) == ErrorKind::CycleDetected);
    CHECK(kind_of(3, {{0, 1}, {1, 2}, {0, 2}}) == ErrorKind::RedundantCover);
    CHECK(kind_of(2, {{0, 1}, {0, 1}}) == ErrorKind::RedundantCover);
    // redundancy through a longer detour
    CHECK(kind_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}) == ErrorKind::RedundantCover);
}

TEST_CASE("cover lists agree with the cover pairs") {
    for (const Poset& p : all_small_posets(4)) {
        std::size_t lower_total = 0, upper_total = 0;
        for (ElementId x = 0; x < p.size(); ++x) {
            for (ElementId y : p.upper_covers(x)) {
                const auto lc = p.lower_covers(y);
                CHECK(std::find(lc.begin(), lc.end(), x) != lc.end());
            }
            lower_total += p.lower_covers(x).size();
            upper_total += p.upper_covers(x).size();
        }
        CHECK(lower_total == p.covers().size());
        CHECK(upper_total == p.covers().size());
        CHECK(std::is_sorted(p.covers().begin(), p.covers().end(), [](const Cover& u, const Cover& v) {
            return std::pair(u.lower, u.upper) < std::pair(v.lower, v.upper);
        }));
    }
}

TEST_CASE("linear extension and grading") {
    const Poset p = build_poset(4, {{2, 0}, {3, 0}, {0, 1}});
    std::vector<std::size_t> pos(4);
    for (std::size_t i = 0; i < 4; ++i) pos[p.linear_extension()[i]] = i;
    for (const Cover& c : p.covers()) CHECK(pos[c.lower] < pos[c.upper]);
    CHECK(p.is_graded());
    CHECK(p.depth(1) == 2);

    // 0 < 1 < 2 with 3 < 2: element 2 sits on chains of length 3 and 2
    const Poset ungraded = build_poset(4, {{0, 1}, {1, 2}, {3, 2}});
    CHECK_FALSE(ungraded.is_graded());
}

TEST_CASE("is_order_ideal examples") {
    const Poset p = chain(2);
    const std::vector<ElementId> only_top{1}, none{}, only_bottom{0};
    CHECK_FALSE(is_order_ideal(p, only_top));
    CHECK(is_order_ideal(p, none));
    CHECK(is_order_ideal(p, only_bottom));
}

TEST_CASE("apply_move examples") {
    const Poset p = chain(2);
    const std::vector<ElementId> zero{0}, both{0, 1};
    CHECK(apply_move(p, make_ideal(p, zero), 1, Coin::Up) == make_ideal(p, both));
    CHECK(apply_move(p, bottom_ideal(p), 1, Coin::Up) == bottom_ideal(p));
    CHECK(apply_move(p, make_ideal(p, both), 0, Coin::Down) == make_ideal(p, both));
}

TEST_CASE("bottom and top ideals") {
    const Poset a = build_poset(3, {});
    CHECK(bottom_ideal(a).size() == 0);
    CHECK(top_ideal(a).size() == 3);
    const Poset c = chain(2);
    CHECK(bottom_ideal(c).members().empty());
    CHECK(top_ideal(c).members() == std::vector<ElementId>{0, 1});
    const Poset e = build_poset(0, {});
    CHECK(bottom_ideal(e) == top_ideal(e));
}

TEST_CASE("rank is the ideal size") {
    const Poset c = chain(2);
    CHECK(rank(bottom_ideal(c)) == 0);
    CHECK(rank(top_ideal(c)) == 2);
    const std::vector<ElementId> zero{0};
    CHECK(rank(make_ideal(c, zero)) == 1);
    const Poset a = build_poset(5, {});
    CHECK(rank(top_ideal(a)) == 5);
}

TEST_CASE("make_ideal rejects non-ideals") {
    const Poset c = chain(2);
    const std::vector<ElementId> one{1};
    CHECK_THROWS_AS(make_ideal(c, one), Error);
}

TEST_CASE("OrderIdeal keeps its size cache") {
    OrderIdeal s(4);
    s.insert(2);
    s.insert(2);
    s.insert(0);
    CHECK(s.size() == 2);
    s.erase(1);
    s.erase(2);
    CHECK(s.size() == 1);
    CHECK(s.members() == std::vector<ElementId>{0});
}

// Exhaustive over every poset on at most 5 elements: closure, monotonicity,
// direction and reversibility of the single-site move.
TEST_CASE("apply_move properties on all posets with up to 5 elements") {
    std::size_t posets = 0, checks = 0;
    for (int n = 0; n <= 5; ++n) {
        for (const Poset& p : all_small_posets(n)) {
            ++posets;
            const auto ideals = all_ideals_by_subsets(p);
            for (const OrderIdeal& i : ideals)
                for (ElementId x = 0; x < p.size(); ++x)
                    for (Coin c : {Coin::Up, Coin::Down}) {
                        const OrderIdeal r = apply_move(p, i, x, c);
                        REQUIRE(is_order_ideal(p, r));
                        if (c == Coin::Up) CHECK(r.size() >= i.size());
                        else CHECK(r.size() <= i.size());
                        if (r != i) {
                            const Coin back = c == Coin::Up ? Coin::Down : Coin::Up;
                            CHECK(apply_move(p, r, x, back) == i);
                        }
                        for (const OrderIdeal& j : ideals) {
                            if (!i.is_subset_of(j)) continue;
                            ++checks;
                            REQUIRE(r.is_subset_of(apply_move(p, j, x, c)));
                        }
                    }
        }
    }
    // naturally labelled posets on 0..5 elements: 1, 1, 2, 7, 40, 357
    CHECK(posets == 408);
    MESSAGE("posets " << posets << ", monotonicity checks " << checks);
}

TEST_CASE("apply_move properties on random larger posets") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Poset p = cftp::test::random_poset(40, 0.08, rng);
        std::uniform_int_distribution<ElementId> site(0, ElementId(p.size() - 1));
        // random walk to produce i <= j
        OrderIdeal i = bottom_ideal(p), j = top_ideal(p);
        for (int step = 0; step < 2000; ++step) {
            const ElementId x = site(rng);
            const Coin c = rng() & 1 ? Coin::Up : Coin::Down;
            try_move(p, i, x, c);
            try_move(p, j, x, c);
            REQUIRE(is_order_ideal(p, i));
            REQUIRE(is_order_ideal(p, j));
            REQUIRE(i.is_subset_of(j));
        }
    }
}
