#include "cftp/oracle/enumerate.hpp"

namespace cftp {

namespace {

struct IdealWalker {
    const Poset& p;
    std::size_t limit;
    OrderIdeal current;
    std::vector<OrderIdeal> found;

    void walk(std::size_t pos) {
        const auto& order = p.linear_extension();
        if (pos == order.size()) {
            if (found.size() == limit)
                throw Error(ErrorKind::LimitExceeded, "more than " + std::to_string(limit) + " ideals");
            found.push_back(current);
            return;
        }
        const ElementId x = order[pos];
        walk(pos + 1);
        bool addable = true;
        for (ElementId y : p.lower_covers(x)) addable = addable && current.contains(y);
        if (addable) {
            current.insert(x);
            walk(pos + 1);
            current.erase(x);
        }
    }
};

}  // namespace

EnumerationResult<OrderIdeal> enumerate_ideals(const Poset& p, std::size_t limit) {
    IdealWalker w{p, limit, OrderIdeal(p.size()), {}};
    w.walk(0);
    EnumerationResult<OrderIdeal> out;
    out.states = std::move(w.found);
    std::sort(out.states.begin(), out.states.end());
    out.count = out.states.size();
    out.by_rank.assign(p.size() + 1, 0);
    for (const auto& s : out.states) ++out.by_rank[s.size()];
    return out;
}

}  // namespace cftp
