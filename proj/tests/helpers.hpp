#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cftp/poset.hpp"

namespace cftp::test {

inline Poset chain(int n) {
    std::vector<Cover> covers;
    for (int i = 0; i + 1 < n; ++i) covers.push_back({ElementId(i), ElementId(i + 1)});
    return build_poset(std::size_t(n), covers);
}

inline Poset antichain(int n) { return build_poset(std::size_t(n), {}); }

// Every Hasse diagram on n labelled elements whose covers respect the
// labelling (lower < upper).  Each poset is built from a subset of the
// n(n-1)/2 possible pairs; redundant subsets are skipped.
inline std::vector<Poset> all_small_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Poset> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Cover> covers;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) covers.push_back({ElementId(pairs[k].first), ElementId(pairs[k].second)});
        try {
            out.push_back(build_poset(std::size_t(n), covers));
        } catch (const std::exception&) {
        }
    }
    return out;
}

// Random poset: a random DAG on n labelled elements reduced to its Hasse
// diagram.
inline Poset random_poset(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution edge(density);
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (edge(rng)) {
                below[j][i] = true;
                for (int k = 0; k < i; ++k)
                    if (below[i][k]) below[j][k] = true;
            }
    std::vector<Cover> covers;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (!below[j][i]) continue;
            bool implied = false;
            for (int k = i + 1; k < j && !implied; ++k) implied = below[j][k] && below[k][i];
            if (!implied) covers.push_back({ElementId(i), ElementId(j)});
        }
    return build_poset(std::size_t(n), covers);
}

}  // namespace cftp::test
