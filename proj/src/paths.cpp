#include "cftp/families/paths.hpp"

#include <map>

#include "cftp/error.hpp"

namespace cftp {

PathPoset path_region_poset(int a, int b, std::vector<int> lower, std::vector<int> upper) {
    if (a < 0 || b < 0) throw Error(ErrorKind::InvalidBounds, "path dimensions must be non-negative");
    if (lower.size() != static_cast<std::size_t>(a) || upper.size() != static_cast<std::size_t>(a))
        throw Error(ErrorKind::InvalidBounds, "bound sequences must have length a = " + std::to_string(a));
    for (int r = 0; r < a; ++r) {
        if (lower[r] < 0 || upper[r] > b || lower[r] > b || upper[r] < 0)
            throw Error(ErrorKind::InvalidBounds, "bound out of [0, b] in row " + std::to_string(r));
        if (r > 0 && (lower[r] > lower[r - 1] || upper[r] > upper[r - 1]))
            throw Error(ErrorKind::InvalidBounds, "bounds must be weakly decreasing in the row index");
    }
    for (int r = 0; r < a; ++r)
        if (lower[r] > upper[r])
            throw Error(ErrorKind::EmptyRegion, "lower bound exceeds upper bound in row " + std::to_string(r));

    PathPoset out;
    out.a = a;
    out.b = b;
    out.lower = std::move(lower);
    out.upper = std::move(upper);

    std::map<std::pair<int, int>, ElementId> id;
    for (int r = 0; r < a; ++r)
        for (int col = out.lower[r]; col < out.upper[r]; ++col) {
            id[{r, col}] = static_cast<ElementId>(out.cells.size());
            out.cells.emplace_back(r, col);
        }
    // The free region is order-convex, so grid adjacency gives the covers.
    std::vector<Cover> covers;
    for (const auto& [cell, x] : id) {
        const auto [r, col] = cell;
        if (auto it = id.find({r + 1, col}); it != id.end()) covers.push_back({x, it->second});
        if (auto it = id.find({r, col + 1}); it != id.end()) covers.push_back({x, it->second});
    }
    out.poset = build_poset(out.cells.size(), std::move(covers));
    return out;
}

PathPoset catalan_paths_system(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "catalan n must be >= 1");
    std::vector<int> lower(n), upper(n, n);
    for (int r = 0; r < n; ++r) lower[r] = n - r;
    return path_region_poset(n, n, std::move(lower), std::move(upper));
}

std::vector<int> ideal_to_row_lengths(const PathPoset& paths, const OrderIdeal& ideal) {
    std::vector<int> lambda = paths.lower;
    for (std::size_t x = 0; x < paths.cells.size(); ++x)
        if (ideal.contains(static_cast<ElementId>(x))) ++lambda[paths.cells[x].first];
    return lambda;
}

OrderIdeal row_lengths_to_ideal(const PathPoset& paths, const std::vector<int>& lambda) {
    if (lambda.size() != static_cast<std::size_t>(paths.a))
        throw Error(ErrorKind::InvalidArgument, "row length vector has wrong size");
    OrderIdeal ideal(paths.cells.size());
    for (std::size_t x = 0; x < paths.cells.size(); ++x) {
        const auto [r, col] = paths.cells[x];
        if (col < lambda[r]) ideal.insert(static_cast<ElementId>(x));
    }
    for (int r = 0; r < paths.a; ++r)
        if (lambda[r] < paths.lower[r] || lambda[r] > paths.upper[r] || (r > 0 && lambda[r] > lambda[r - 1]))
            throw Error(ErrorKind::InvalidArgument, "row lengths leave the corridor");
    return ideal;
}

std::string path_word(const PathPoset& paths, const OrderIdeal& ideal) {
    const std::vector<int> lambda = ideal_to_row_lengths(paths, ideal);
    std::string word;
    word.reserve(static_cast<std::size_t>(paths.a + paths.b));
    int x = 0;
    for (int r = paths.a - 1; r >= 0; --r) {
        word.append(static_cast<std::size_t>(lambda[r] - x), 'U');
        x = lambda[r];
        word.push_back('D');
    }
    word.append(static_cast<std::size_t>(paths.b - x), 'U');
    return word;
}

}  // namespace cftp
