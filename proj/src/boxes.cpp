#include "cftp/families/boxes.hpp"

#include <cmath>
#include <string>

#include "cftp/error.hpp"

namespace cftp {

void validate(const BoxesParams& p) {
    if (p.a < 1 || p.b < 1 || p.c < 1)
        throw Error(ErrorKind::InvalidArgument, "box sides must be >= 1, got (" + std::to_string(p.a) + "," +
                                                    std::to_string(p.b) + "," + std::to_string(p.c) + ")");
}

Poset boxes_poset(const BoxesParams& p, std::size_t element_limit) {
    validate(p);
    if (p.volume() > element_limit)
        throw Error(ErrorKind::CapacityExceeded,
                    std::to_string(p.volume()) + " elements exceeds limit " + std::to_string(element_limit));
    std::vector<Cover> covers;
    covers.reserve(3 * p.volume());
    for (int i = 0; i < p.a; ++i)
        for (int j = 0; j < p.b; ++j)
            for (int k = 0; k < p.c; ++k) {
                const ElementId x = box_element(p, i, j, k);
                if (i + 1 < p.a) covers.push_back({x, box_element(p, i + 1, j, k)});
                if (j + 1 < p.b) covers.push_back({x, box_element(p, i, j + 1, k)});
                if (k + 1 < p.c) covers.push_back({x, box_element(p, i, j, k + 1)});
            }
    return build_poset(p.volume(), std::move(covers));
}

BigInt macmahon_count(const BoxesParams& p) {
    validate(p);
    // Group the factors (s+2)/(s+1) by s = i+j+k.
    const int max_sum = p.a + p.b + p.c - 3;
    std::vector<long long> multiplicity(static_cast<std::size_t>(max_sum) + 1, 0);
    for (int i = 0; i < p.a; ++i)
        for (int j = 0; j < p.b; ++j) {
            const int lo = i + j;
            for (int k = 0; k < p.c; ++k) ++multiplicity[static_cast<std::size_t>(lo + k)];
        }
    BigInt num = 1, den = 1;
    for (int s = 0; s <= max_sum; ++s) {
        const auto m = static_cast<unsigned>(multiplicity[static_cast<std::size_t>(s)]);
        if (m == 0) continue;
        num *= boost::multiprecision::pow(BigInt(s + 2), m);
        den *= boost::multiprecision::pow(BigInt(s + 1), m);
    }
    return num / den;
}

long long PlanePartition::volume() const noexcept {
    long long v = 0;
    for (int x : parts) v += x;
    return v;
}

bool is_plane_partition(const PlanePartition& pp, const BoxesParams& p) {
    if (pp.rows != p.a || pp.cols != p.b || pp.parts.size() != static_cast<std::size_t>(p.a) * p.b) return false;
    for (int i = 0; i < p.a; ++i)
        for (int j = 0; j < p.b; ++j) {
            const int v = pp(i, j);
            if (v < 0 || v > p.c) return false;
            if (i > 0 && pp(i - 1, j) < v) return false;
            if (j > 0 && pp(i, j - 1) < v) return false;
        }
    return true;
}

PlanePartition ideal_to_plane_partition(const OrderIdeal& ideal, const BoxesParams& p) {
    PlanePartition pp(p.a, p.b);
    for (int i = 0; i < p.a; ++i)
        for (int j = 0; j < p.b; ++j) {
            int h = 0;
            for (int k = 0; k < p.c; ++k)
                if (ideal.contains(box_element(p, i, j, k))) ++h;
            pp(i, j) = h;
        }
    return pp;
}

OrderIdeal plane_partition_to_ideal(const PlanePartition& pp, const BoxesParams& p) {
    if (!is_plane_partition(pp, p)) throw Error(ErrorKind::InvalidArgument, "not a plane partition in the box");
    OrderIdeal ideal(p.volume());
    for (int i = 0; i < p.a; ++i)
        for (int j = 0; j < p.b; ++j)
            for (int k = 0; k < pp(i, j); ++k) ideal.insert(box_element(p, i, j, k));
    return ideal;
}

Point2 project(const std::array<int, 3>& p) noexcept {
    constexpr double half_sqrt3 = 0.86602540378443864676;
    return {half_sqrt3 * (p[1] - p[0]), p[2] - 0.5 * (p[0] + p[1])};
}

std::array<std::array<int, 3>, 4> lozenge_vertices(const Lozenge& l) noexcept {
    // The two spanning axes, in cyclic order after the normal axis.
    const int n = static_cast<int>(l.orientation);
    const int u = (n + 1) % 3, v = (n + 2) % 3;
    auto p0 = l.corner, p1 = l.corner, p2 = l.corner, p3 = l.corner;
    ++p1[u];
    ++p2[u];
    ++p2[v];
    ++p3[v];
    return {p0, p1, p2, p3};
}

Point2 lozenge_center(const Lozenge& l) noexcept {
    const Point2 a = project(lozenge_vertices(l)[0]);
    const Point2 c = project(lozenge_vertices(l)[2]);
    return {(a.x + c.x) / 2, (a.y + c.y) / 2};
}

std::vector<Lozenge> plane_partition_to_lozenges(const PlanePartition& pp, const BoxesParams& p) {
    if (!is_plane_partition(pp, p)) throw Error(ErrorKind::InvalidArgument, "not a plane partition in the box");
    std::vector<Lozenge> out;
    out.reserve(static_cast<std::size_t>(p.a) * p.b + static_cast<std::size_t>(p.b) * p.c +
                static_cast<std::size_t>(p.a) * p.c);
    // Top faces: one per column (i, j) at height pp(i, j).
    for (int i = 0; i < p.a; ++i)
        for (int j = 0; j < p.b; ++j) out.push_back({LozengeOrientation::Z, {i, j, pp(i, j)}});
    // Faces normal to x: one per (j, k), at x = #{i : pp(i, j) > k}.
    for (int j = 0; j < p.b; ++j)
        for (int k = 0; k < p.c; ++k) {
            int x = 0;
            while (x < p.a && pp(x, j) > k) ++x;
            out.push_back({LozengeOrientation::X, {x, j, k}});
        }
    // Faces normal to y: one per (i, k), at y = #{j : pp(i, j) > k}.
    for (int i = 0; i < p.a; ++i)
        for (int k = 0; k < p.c; ++k) {
            int y = 0;
            while (y < p.b && pp(i, y) > k) ++y;
            out.push_back({LozengeOrientation::Y, {i, y, k}});
        }
    return out;
}

std::array<std::array<int, 3>, 6> hexagon_corners(const BoxesParams& p) noexcept {
    return {{{p.a, 0, 0}, {p.a, p.b, 0}, {0, p.b, 0}, {0, p.b, p.c}, {0, 0, p.c}, {p.a, 0, p.c}}};
}

}  // namespace cftp
