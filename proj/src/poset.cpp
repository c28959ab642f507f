#include "cftp/poset.hpp"

#include <algorithm>
#include <string>

#include "cftp/error.hpp"

namespace cftp {

namespace {

// Downward search from `from` for `target`, pruning elements whose depth
// cannot lie above target.
bool reaches_down(const Poset& p, ElementId from, ElementId target, std::vector<std::uint32_t>& mark,
                  std::uint32_t stamp) {
    const std::uint32_t floor_depth = p.depth(target);
    std::vector<ElementId> stack{from};
    mark[from] = stamp;
    while (!stack.empty()) {
        const ElementId v = stack.back();
        stack.pop_back();
        if (v == target) return true;
        for (ElementId w : p.lower_covers(v)) {
            if (mark[w] == stamp || p.depth(w) < floor_depth) continue;
            if (p.depth(w) == floor_depth && w != target) continue;
            mark[w] = stamp;
            stack.push_back(w);
        }
    }
    return false;
}

}  // namespace

Poset build_poset(std::size_t elements, std::vector<Cover> covers) {
    for (const Cover& c : covers) {
        if (c.lower >= elements || c.upper >= elements)
            throw Error(ErrorKind::IdentifierOutOfRange,
                        "cover (" + std::to_string(c.lower) + "," + std::to_string(c.upper) + ") with " +
                            std::to_string(elements) + " elements");
        if (c.lower == c.upper)
            throw Error(ErrorKind::CycleDetected, "self-cover on element " + std::to_string(c.lower));
    }
    std::sort(covers.begin(), covers.end());
    if (auto dup = std::adjacent_find(covers.begin(), covers.end()); dup != covers.end())
        throw Error(ErrorKind::RedundantCover,
                    "duplicate cover (" + std::to_string(dup->lower) + "," + std::to_string(dup->upper) + ")");

    Poset p;
    p.covers_ = std::move(covers);
    const auto& cv = p.covers_;

    p.lower_offset_.assign(elements + 1, 0);
    p.upper_offset_.assign(elements + 1, 0);
    for (const Cover& c : cv) {
        ++p.lower_offset_[c.upper + 1];
        ++p.upper_offset_[c.lower + 1];
    }
    for (std::size_t i = 0; i < elements; ++i) {
        p.lower_offset_[i + 1] += p.lower_offset_[i];
        p.upper_offset_[i + 1] += p.upper_offset_[i];
    }
    p.lower_.resize(cv.size());
    p.upper_.resize(cv.size());
    {
        auto lo = p.lower_offset_, up = p.upper_offset_;
        for (const Cover& c : cv) {
            p.lower_[lo[c.upper]++] = c.lower;
            p.upper_[up[c.lower]++] = c.upper;
        }
    }

    // Kahn's algorithm; depth is the longest chain below each element.
    std::vector<std::size_t> pending(elements);
    p.depth_.assign(elements, 0);
    p.linear_extension_.clear();
    p.linear_extension_.reserve(elements);
    for (std::size_t x = 0; x < elements; ++x) {
        pending[x] = p.lower_offset_[x + 1] - p.lower_offset_[x];
        if (pending[x] == 0) p.linear_extension_.push_back(static_cast<ElementId>(x));
    }
    for (std::size_t head = 0; head < p.linear_extension_.size(); ++head) {
        const ElementId x = p.linear_extension_[head];
        for (ElementId y : p.upper_covers(x)) {
            p.depth_[y] = std::max(p.depth_[y], p.depth_[x] + 1);
            if (--pending[y] == 0) p.linear_extension_.push_back(y);
        }
    }
    if (p.linear_extension_.size() != elements)
        throw Error(ErrorKind::CycleDetected, "cover relation contains a cycle");

    // A cover (x, y) is implied by transitivity iff some other lower cover w
    // of y lies above x.
    std::vector<std::uint32_t> mark(elements, 0);
    std::uint32_t stamp = 0;
    for (const Cover& c : cv) {
        for (ElementId w : p.lower_covers(c.upper)) {
            if (w == c.lower || p.depth_[w] <= p.depth_[c.lower]) continue;
            if (reaches_down(p, w, c.lower, mark, ++stamp))
                throw Error(ErrorKind::RedundantCover, "cover (" + std::to_string(c.lower) + "," +
                                                           std::to_string(c.upper) + ") is implied via " +
                                                           std::to_string(w));
        }
    }

    p.graded_ = std::all_of(cv.begin(), cv.end(),
                            [&](const Cover& c) { return p.depth_[c.upper] == p.depth_[c.lower] + 1; });
    return p;
}

bool Poset::leq(ElementId x, ElementId y) const {
    if (x == y) return true;
    if (depth_[x] >= depth_[y]) return false;
    std::vector<std::uint32_t> mark(size(), 0);
    return reaches_down(*this, y, x, mark, 1);
}

std::vector<ElementId> OrderIdeal::members() const {
    std::vector<ElementId> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(static_cast<ElementId>(i));
    return out;
}

bool OrderIdeal::is_subset_of(const OrderIdeal& other) const {
    if (size_ > other.size_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i]) return false;
    return true;
}

bool is_order_ideal(const Poset& p, const OrderIdeal& ideal) {
    if (ideal.capacity() != p.size()) return false;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!ideal.contains(static_cast<ElementId>(x))) continue;
        for (ElementId y : p.lower_covers(static_cast<ElementId>(x)))
            if (!ideal.contains(y)) return false;
    }
    return true;
}

bool is_order_ideal(const Poset& p, std::span<const ElementId> subset) {
    OrderIdeal ideal(p.size());
    for (ElementId x : subset) {
        if (x >= p.size()) return false;
        ideal.insert(x);
    }
    return is_order_ideal(p, ideal);
}

OrderIdeal make_ideal(const Poset& p, std::span<const ElementId> members) {
    OrderIdeal ideal(p.size());
    for (ElementId x : members) {
        if (x >= p.size()) throw Error(ErrorKind::IdentifierOutOfRange, "element " + std::to_string(x));
        ideal.insert(x);
    }
    if (!is_order_ideal(p, ideal)) throw Error(ErrorKind::InvalidArgument, "member set is not downward closed");
    return ideal;
}

OrderIdeal bottom_ideal(const Poset& p) { return OrderIdeal(p.size()); }

OrderIdeal top_ideal(const Poset& p) {
    OrderIdeal ideal(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) ideal.insert(static_cast<ElementId>(x));
    return ideal;
}

}  // namespace cftp
