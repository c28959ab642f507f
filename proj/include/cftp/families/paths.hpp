#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cftp/poset.hpp"

namespace cftp {

/// Minimal lattice paths from (0, a) to (b, 0) with east and south steps,
/// confined to a monotone corridor.  A path is identified with the Ferrers
/// diagram below it: row r (r = 0 at the bottom) holds lambda[r] cells, and
/// lower[r] <= lambda[r] <= upper[r].  Cells forced by `lower` are not poset
/// elements; the free cells (r, col) with lower[r] <= col < upper[r] are,
/// ordered componentwise.
struct PathPoset {
    int a = 0;
    int b = 0;
    std::vector<int> lower;
    std::vector<int> upper;
    Poset poset;
    std::vector<std::pair<int, int>> cells;  // (row, col) of each element
};

/// Throws InvalidBounds for malformed or non-monotone bounds and EmptyRegion
/// when lower exceeds upper somewhere.
PathPoset path_region_poset(int a, int b, std::vector<int> lower, std::vector<int> upper);

/// Paths from (0, n) to (n, 0) that stay weakly above the anti-diagonal;
/// there are Catalan(n) of them.
PathPoset catalan_paths_system(int n);

std::vector<int> ideal_to_row_lengths(const PathPoset& paths, const OrderIdeal& ideal);
OrderIdeal row_lengths_to_ideal(const PathPoset& paths, const std::vector<int>& lambda);

/// Step string of the path, 'U' for an east step and 'D' for a south step
/// (the Dyck reading: rotated 45 degrees, east rises and south falls).
std::string path_word(const PathPoset& paths, const OrderIdeal& ideal);

}  // namespace cftp
