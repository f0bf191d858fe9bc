#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toric/configuration.hpp"

namespace toric {

/// Sorted sign-canonical ⊑-minimal nonzero elements of L(A), one per ± pair.
struct GraverBasis {
    std::vector<Move> moves;
    std::string config_digest;
};

struct GraverLimits {
    /// Maximum number of elements held by the completion before giving up.
    std::size_t max_elements = 200'000;
    /// Maximum number of lattice points scanned by the box oracle.
    std::size_t max_box_points = 50'000'000;
};

/// Repeatedly subtracts any g ∈ G ∪ (−G) with g ⊑ s until none applies.
IntVec normal_form(const IntVec& s, std::span<const Move> G);

/// Completion: seed with a lattice generating set and its negatives, add the
/// normal forms of pairwise sums until closure, then sieve to ⊑-minimal
/// elements. Lawrence liftings are seeded with the structured generators
/// {b in row i, −b in row j}.
GraverBasis graver_basis(const Configuration& config, const GraverLimits& limits = {});

/// Independent oracle: every nonzero lattice element with all coordinates in
/// [−K, K], found by pairing disjoint-support points of equal degree inside
/// the box, sieved to its ⊑-minimal elements.
GraverBasis graver_oracle_box(const Configuration& config, Int K, const GraverLimits& limits = {});

/// Largest absolute coordinate over a set of moves.
Int max_abs_entry(std::span<const Move> moves);

} // namespace toric
