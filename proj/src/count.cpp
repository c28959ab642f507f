#include "cftp/oracle/count.hpp"

#include <bit>
#include <string>

#include "cftp/error.hpp"

namespace cftp {

namespace {

inline bool test(const ElementMask& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1u; }
inline void set(ElementMask& m, std::size_t i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }

bool is_empty(const ElementMask& m) {
    for (auto w : m)
        if (w) return false;
    return true;
}

std::size_t popcount_and(const ElementMask& a, const ElementMask& b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return n;
}

ElementMask minus(const ElementMask& a, const ElementMask& b) {
    ElementMask out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & ~b[i];
    return out;
}

}  // namespace

std::size_t IdealCounter::MaskHash::operator()(const ElementMask& m) const noexcept {
    std::uint64_t h = 0x84222325CBF29CE4ull;
    for (auto w : m) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0x100000001B3ull;
    }
    return static_cast<std::size_t>(h);
}

IdealCounter::IdealCounter(const Poset& p, std::size_t budget)
    : poset_(&p), budget_(budget), words_((p.size() + 63) / 64) {
    const std::size_t m = p.size();
    up_.assign(m, ElementMask(words_, 0));
    down_.assign(m, ElementMask(words_, 0));
    const auto& order = p.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const ElementId x = *it;
        set(up_[x], x);
        for (ElementId y : p.upper_covers(x))
            for (std::size_t w = 0; w < words_; ++w) up_[x][w] |= up_[y][w];
    }
    for (ElementId x : order) {
        set(down_[x], x);
        for (ElementId y : p.lower_covers(x))
            for (std::size_t w = 0; w < words_; ++w) down_[x][w] |= down_[y][w];
    }
}

ElementMask IdealCounter::all() const {
    ElementMask m(words_, 0);
    for (std::size_t i = 0; i < poset_->size(); ++i) set(m, i);
    return m;
}

ElementId IdealCounter::pivot(const ElementMask& remaining) const {
    ElementId best = 0;
    std::size_t best_score = 0;
    bool found = false;
    for (std::size_t x = 0; x < poset_->size(); ++x) {
        if (!test(remaining, x)) continue;
        const std::size_t score = popcount_and(up_[x], remaining) + popcount_and(down_[x], remaining);
        if (!found || score > best_score) {
            best = static_cast<ElementId>(x);
            best_score = score;
            found = true;
        }
    }
    return best;
}

BigInt IdealCounter::count(const ElementMask& remaining) {
    if (is_empty(remaining)) return 1;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;

    // Connected component (under comparability) of the first element.
    ElementMask component(words_, 0);
    {
        std::size_t first = 0;
        while (!test(remaining, first)) ++first;
        std::vector<std::size_t> stack{first};
        set(component, first);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t fresh = (up_[v][w] | down_[v][w]) & remaining[w] & ~component[w];
                component[w] |= fresh;
                while (fresh) {
                    stack.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(fresh)));
                    fresh &= fresh - 1;
                }
            }
        }
    }

    BigInt result;
    if (component != remaining) {
        result = count(component) * count(minus(remaining, component));
    } else {
        const ElementId x = pivot(remaining);
        result = count(minus(remaining, up_[x])) + count(minus(remaining, down_[x]));
    }
    if (memo_.size() >= budget_)
        throw Error(ErrorKind::BudgetExceeded, "ideal counting memo exceeded " + std::to_string(budget_) + " entries");
    memo_.emplace(remaining, result);
    return result;
}

BigInt count_ideals(const Poset& p, std::size_t budget) {
    IdealCounter counter(p, budget);
    return counter.count_all();
}

BigInt uniform_below(const BigInt& n, std::mt19937_64& rng) {
    if (n <= 0) throw Error(ErrorKind::InvalidArgument, "uniform_below needs n > 0");
    const std::size_t bits = boost::multiprecision::msb(n) + 1;
    const std::size_t limbs = (bits + 63) / 64;
    for (;;) {
        BigInt r = 0;
        for (std::size_t i = 0; i < limbs; ++i) {
            r <<= 64;
            r |= rng();
        }
        r &= (BigInt(1) << bits) - 1;
        if (r < n) return r;
    }
}

OrderIdeal RecursiveSampler::sample(std::mt19937_64& rng) {
    const Poset& p = counter_.poset();
    OrderIdeal ideal(p.size());
    ElementMask remaining = counter_.all();
    while (!is_empty(remaining)) {
        const ElementId x = counter_.pivot(remaining);
        const ElementMask with_x = minus(remaining, counter_.down_set(x));
        const BigInt total = counter_.count(remaining);
        const BigInt favourable = counter_.count(with_x);
        if (uniform_below(total, rng) < favourable) {
            for (std::size_t y = 0; y < p.size(); ++y)
                if (test(remaining, y) && test(counter_.down_set(x), y)) ideal.insert(static_cast<ElementId>(y));
            remaining = with_x;
        } else {
            remaining = minus(remaining, counter_.up_set(x));
        }
    }
    return ideal;
}

std::pair<BigInt, BigInt> RecursiveSampler::first_decision_odds() {
    const ElementMask all = counter_.all();
    const ElementId x = counter_.pivot(all);
    return {counter_.count(minus(all, counter_.down_set(x))), counter_.count(all)};
}

OrderIdeal recursive_exact_sample(const Poset& p, std::mt19937_64& rng, std::size_t budget) {
    RecursiveSampler sampler(p, budget);
    return sampler.sample(rng);
}

}  // namespace cftp
