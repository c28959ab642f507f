#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

#include "cftp/bigint.hpp"
#include "cftp/poset.hpp"

namespace cftp {

inline constexpr std::size_t kDefaultElementLimit = std::size_t{1} << 20;

/// Chain cardinalities of the box poset a x b x c.
struct BoxesParams {
    int a = 1;
    int b = 1;
    int c = 1;

    std::size_t volume() const noexcept {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(b) * static_cast<std::size_t>(c);
    }
    friend bool operator==(const BoxesParams&, const BoxesParams&) = default;
};

/// Throws InvalidArgument unless a, b, c >= 1.
void validate(const BoxesParams& params);

/// Element id of (i, j, k); ids run k fastest.
inline ElementId box_element(const BoxesParams& p, int i, int j, int k) noexcept {
    return static_cast<ElementId>((i * p.b + j) * p.c + k);
}

/// Product of chains a x b x c with covers along each axis.  Throws
/// CapacityExceeded when a*b*c exceeds element_limit.
Poset boxes_poset(const BoxesParams& params, std::size_t element_limit = kDefaultElementLimit);

/// Number of plane partitions in an a x b x c box, by the MacMahon product,
/// in exact integer arithmetic.
BigInt macmahon_count(const BoxesParams& params);

/// a x b matrix of stack heights in [0, c], weakly decreasing along rows and
/// columns.
struct PlanePartition {
    int rows = 0;
    int cols = 0;
    std::vector<int> parts;  // row-major

    PlanePartition() = default;
    PlanePartition(int r, int c) : rows(r), cols(c), parts(static_cast<std::size_t>(r) * c, 0) {}

    int& operator()(int i, int j) { return parts[static_cast<std::size_t>(i) * cols + j]; }
    int operator()(int i, int j) const { return parts[static_cast<std::size_t>(i) * cols + j]; }

    long long volume() const noexcept;

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
    friend auto operator<=>(const PlanePartition& x, const PlanePartition& y) { return x.parts <=> y.parts; }
};

bool is_plane_partition(const PlanePartition& pp, const BoxesParams& params);

PlanePartition ideal_to_plane_partition(const OrderIdeal& ideal, const BoxesParams& params);
OrderIdeal plane_partition_to_ideal(const PlanePartition& pp, const BoxesParams& params);

/// Rhombus orientation, named by the axis normal to the projected unit square.
enum class LozengeOrientation { X, Y, Z };

/// One visible unit square of the stepped surface.  `corner` is its minimal
/// integer corner in 3-space; the square spans the two axes other than
/// `orientation`.
struct Lozenge {
    LozengeOrientation orientation = LozengeOrientation::Z;
    std::array<int, 3> corner{};

    friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Fixed axonometric projection: x -> (-sqrt3/2, -1/2), y -> (sqrt3/2, -1/2),
/// z -> (0, 1).  Integer points with equal (y - x, z - x) coincide.
Point2 project(const std::array<int, 3>& p) noexcept;

/// Integer lattice coordinates (y - x, z - x) of the projection.
inline std::array<int, 2> lattice_coords(const std::array<int, 3>& p) noexcept {
    return {p[1] - p[0], p[2] - p[0]};
}

std::array<std::array<int, 3>, 4> lozenge_vertices(const Lozenge& l) noexcept;
Point2 lozenge_center(const Lozenge& l) noexcept;

/// The ab + bc + ca rhombi of the (a, b, c) hexagon tiling determined by pp:
/// bc of orientation X, ac of Y, ab of Z.
std::vector<Lozenge> plane_partition_to_lozenges(const PlanePartition& pp, const BoxesParams& params);

/// Hexagon corners in cyclic order, starting at (a,0,0).
std::array<std::array<int, 3>, 6> hexagon_corners(const BoxesParams& params) noexcept;

}  // namespace cftp
