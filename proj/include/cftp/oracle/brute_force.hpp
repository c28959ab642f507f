#pragma once

#include <vector>

#include "cftp/families/asm.hpp"
#include "cftp/families/boxes.hpp"
#include "cftp/families/domino.hpp"
#include "cftp/families/independent_sets.hpp"

namespace cftp {

// Direct enumerations from each family's defining axioms.  They share no
// code with the toggle systems and serve as ground truth for them.

/// All n x n alternating-sign matrices, built row by row from rows whose
/// prefix sums lie in {0, 1}, keeping column prefix sums in {0, 1}.
std::vector<SignMatrix> brute_force_asms(int n);

/// All independent sets, as IndependentSetState, by subset enumeration.
std::vector<IndependentSetState> brute_force_independent_sets(const IndependentSetSystem& sys);

/// All domino tilings (perfect matchings of the cell adjacency graph).
std::vector<std::vector<Domino>> brute_force_domino_tilings(const std::vector<Cell>& region);

/// All plane partitions fitting in the box.
std::vector<PlanePartition> brute_force_plane_partitions(const BoxesParams& params);

}  // namespace cftp
